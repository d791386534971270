#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "uq2/algebra.hpp"

using namespace uq2;
using E = AlgebraElement;

namespace {

const QParam qp = QParam::standard();

E random_element(std::mt19937_64& rng, int terms, int degree) {
  std::uniform_int_distribution<int> nd(-degree, degree), md(0, degree);
  std::normal_distribution<double> c;
  E x;
  for (int t = 0; t < terms; ++t) x.add(E::mono({nd(rng), md(rng), md(rng), nd(rng)}, cplx(c(rng), c(rng))));
  return x;
}

double rel_diff(const E& x, const E& y) { return (x - y).max_abs() / std::max(1.0, std::max(x.max_abs(), y.max_abs())); }

}  // namespace

TEST_CASE("defining relations hold in normal form") {
  Algebra A(qp);
  E a = E::gen(Gen::a), as = E::gen(Gen::a_star), b = E::gen(Gen::b), bs = E::gen(Gen::b_star);
  E D = E::gen(Gen::D), Ds = E::gen(Gen::D_star), one = E::unit();
  const double q2 = qp.abs_q * qp.abs_q;
  CHECK((A.mul(b, a) - A.mul(a, b).scaled(qp.q)).max_abs() < 1e-14);
  CHECK((A.mul(as, b) - A.mul(b, as).scaled(qp.q)).max_abs() < 1e-14);
  CHECK((A.mul(b, bs) - A.mul(bs, b)).max_abs() < 1e-14);
  CHECK((A.mul(a, as) + A.mul(b, bs) - one).max_abs() < 1e-14);
  CHECK((A.mul(as, a) + A.mul(bs, b).scaled(q2) - one).max_abs() < 1e-14);
  CHECK((A.mul(a, D) - A.mul(D, a)).max_abs() < 1e-14);
  CHECK((A.mul(b, D) - A.mul(D, b).scaled(qp.q / qp.qbar)).max_abs() < 1e-14);
  CHECK((A.mul(D, Ds) - one).max_abs() == 0.0);
  CHECK((A.mul(Ds, D) - one).max_abs() == 0.0);
}

TEST_CASE("documented products") {
  Algebra A(qp);
  E ba = A.mul(E::gen(Gen::b), E::gen(Gen::a));
  REQUIRE(ba.terms.size() == 1);
  CHECK(std::abs(ba.terms.at({1, 1, 0, 0}) - qp.q) < 1e-15);
  E aas = A.mul(E::gen(Gen::a), E::gen(Gen::a_star));
  CHECK(aas.terms.size() == 2);
  CHECK(std::abs(aas.terms.at({}) - 1.0) < 1e-15);
  CHECK(std::abs(aas.terms.at({0, 1, 1, 0}) + 1.0) < 1e-15);
}

TEST_CASE("multiplication is associative on random triples") {
  Algebra A(qp);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    E x = random_element(rng, 3, 2), y = random_element(rng, 3, 2), z = random_element(rng, 3, 2);
    CHECK(rel_diff(A.mul(A.mul(x, y), z), A.mul(x, A.mul(y, z))) < 1e-12);
  }
}

TEST_CASE("adjoint is an anti-multiplicative involution") {
  Algebra A(qp);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    E x = random_element(rng, 3, 2), y = random_element(rng, 3, 2);
    CHECK(rel_diff(A.adjoint(A.mul(x, y)), A.mul(A.adjoint(y), A.adjoint(x))) < 1e-12);
    CHECK(rel_diff(A.adjoint(A.adjoint(x)), x) < 1e-12);
  }
  E s = A.adjoint(E::unit(cplx(2.0, 3.0)));
  CHECK(std::abs(s.terms.at({}) - cplx(2.0, -3.0)) == 0.0);
  CHECK(A.adjoint(E::gen(Gen::a)).terms.count({-1, 0, 0, 0}) == 1);
}

TEST_CASE("normal form is canonical") {
  Algebra A(qp);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    E x = A.mul(random_element(rng, 4, 3), E::unit());
    E y = A.mul(x, E::unit());
    CHECK((x - y).max_abs() == 0.0);
  }
}

TEST_CASE("low-order matrix coefficients") {
  Algebra A(qp);
  E t0 = A.matrix_coefficient(0, 0, 0, 0);
  CHECK((t0 - E::unit()).max_abs() < 1e-15);
  CHECK((A.matrix_coefficient(1, -1, -1, 0) - E::gen(Gen::a)).max_abs() < 1e-14);
  CHECK((A.matrix_coefficient(1, 1, 1, 0) - E::mono({-1, 0, 0, 1})).max_abs() < 1e-14);
  CHECK_THROWS_AS(A.matrix_coefficient(2, 1, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(A.matrix_coefficient(2, 4, 0, 0), std::out_of_range);
}

TEST_CASE("matrix coefficients agree with the little q-Jacobi expansion") {
  Algebra A(qp);
  for (int l2 = 0; l2 <= 5; ++l2)
    for (int i2 = -l2; i2 <= l2; i2 += 2)
      for (int j2 = -l2; j2 <= l2; j2 += 2)
        CHECK(rel_diff(A.jacobi_form(l2, i2, j2), A.matrix_coefficient(l2, i2, j2, 0)) < 1e-10);
}

TEST_CASE("generator actions on the Peter-Weyl basis") {
  for (auto p : {QParam::standard(), QParam::make(0.3, 0.17), QParam::make(0.8, -0.4)}) {
    Algebra A(p);
    double worst = 0.0;
    for (int l2 = 0; l2 <= 4; ++l2)
      for (int i2 = -l2; i2 <= l2; i2 += 2)
        for (int j2 = -l2; j2 <= l2; j2 += 2)
          for (int k : {-1, 0, 2})
            for (Gen g : all_gens) worst = std::max(worst, A.verify_action(l2, i2, j2, k, g));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("fundamental corepresentation is unitary") {
  Algebra A(qp);
  // u = (t_{ij}) for l = 1/2; sum_k t_{ik} t_{jk}^* = delta_ij
  for (int i2 : {-1, 1})
    for (int j2 : {-1, 1}) {
      E s;
      for (int k2 : {-1, 1}) s.add(A.mul(A.matrix_coefficient(1, i2, k2, 0), A.adjoint(A.matrix_coefficient(1, j2, k2, 0))));
      E target = i2 == j2 ? E::unit() : E{};
      CHECK((s - target).max_abs() < 1e-13);
    }
}

TEST_CASE("generator names round-trip") {
  for (Gen g : all_gens) CHECK(gen_from_name(gen_name(g)) == g);
}
