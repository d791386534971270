#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "uq2/hopf.hpp"

using namespace uq2;
using E = AlgebraElement;

namespace {

double tensor_diff(const Tensor2& x, const Tensor2& y) {
  Tensor2 d = x;
  for (const auto& [k, c] : y) d[k] -= c;
  double m = 0.0;
  for (const auto& [k, c] : d) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

TEST_CASE("structure maps on generators") {
  const QParam qp = QParam::standard();
  Algebra A(qp);
  Hopf H(A);
  Tensor2 dD = H.comultiply(E::gen(Gen::D));
  REQUIRE(dD.size() == 1);
  CHECK(std::abs(dD.at({Monomial{0, 0, 0, 1}, Monomial{0, 0, 0, 1}}) - 1.0) < 1e-15);
  CHECK(std::abs(H.counit(E::gen(Gen::a)) - 1.0) < 1e-15);
  CHECK(std::abs(H.counit(E::gen(Gen::b))) < 1e-15);
  CHECK(std::abs(H.counit(E::gen(Gen::D)) - 1.0) < 1e-15);
  E Sb = H.antipode(E::gen(Gen::b));
  REQUIRE(Sb.terms.size() == 1);
  CHECK(std::abs(Sb.terms.at({0, 1, 0, -1}) + qp.q) < 1e-15);
  CHECK((H.antipode(E::gen(Gen::a)) - E::gen(Gen::a_star)).max_abs() < 1e-15);
}

TEST_CASE("Hopf axioms on monomials of degree <= 3") {
  for (auto qp : {QParam::standard(), QParam::make(0.7, 0.31)}) {
    Algebra A(qp);
    Hopf H(A);
    HopfResiduals r = H.check_axioms(3);
    CHECK(r.monomials == 70);
    CHECK(r.coassociativity < 1e-10);
    CHECK(r.counit_left < 1e-10);
    CHECK(r.counit_right < 1e-10);
    CHECK(r.antipode_left < 1e-10);
    CHECK(r.antipode_right < 1e-10);
    CHECK(r.comultiplication_star < 1e-10);
  }
}

TEST_CASE("comultiplication is multiplicative and the antipode anti-multiplicative") {
  Algebra A(QParam::standard());
  Hopf H(A);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> g(0, 5);
  for (int trial = 0; trial < 30; ++trial) {
    E x = E::gen(all_gens[g(rng)]), y = E::gen(all_gens[g(rng)]);
    CHECK(tensor_diff(H.comultiply(A.mul(x, y)), H.tensor_mul(H.comultiply(x), H.comultiply(y))) < 1e-12);
    CHECK((H.antipode(A.mul(x, y)) - A.mul(H.antipode(y), H.antipode(x))).max_abs() < 1e-12);
    CHECK(std::abs(H.counit(A.mul(x, y)) - H.counit(x) * H.counit(y)) < 1e-14);
  }
}

TEST_CASE("monomial enumeration") {
  auto m = monomials_up_to(1);
  CHECK(m.size() == 7);
  for (const auto& x : monomials_up_to(3)) CHECK(x.degree() <= 3);
}
