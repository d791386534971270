#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "uq2/pw.hpp"
#include "uq2/tridiag.hpp"

using namespace uq2;

namespace {

const QParam qp = QParam::standard();

PWVec basis(int l2, int i2, int j2, int k) { return PWVec{{PWIndex{l2, i2, j2, k}, 1.0}}; }

cplx coefficient(const PWVec& v, PWIndex x) {
  auto it = v.find(x);
  return it == v.end() ? cplx(0.0) : it->second;
}

PWVec random_vector(std::mt19937_64& rng, int l2_max, int k_radius, int terms) {
  std::uniform_int_distribution<int> ld(0, l2_max), kd(-k_radius, k_radius);
  std::normal_distribution<double> nd;
  PWVec v;
  for (int t = 0; t < terms; ++t) {
    int l2 = ld(rng);
    std::uniform_int_distribution<int> id(0, l2);
    v[{l2, 2 * id(rng) - l2, 2 * id(rng) - l2, kd(rng)}] += cplx(nd(rng), nd(rng));
  }
  return v;
}

}  // namespace

TEST_CASE("documented generator actions") {
  PWVec e0 = basis(0, 0, 0, 0);
  PWVec De = apply(Gen::D, e0, qp);
  CHECK(De.size() == 1);
  CHECK(std::abs(coefficient(De, {0, 0, 0, -1}) - 1.0) < 1e-15);

  PWVec be = apply(Gen::b, e0, qp);
  CHECK(be.size() == 1);
  CHECK(std::abs(coefficient(be, {1, -1, 1, 0})) == doctest::Approx(1.0 / std::sqrt(1.0 + 0.25)));

  PWVec bs = apply(Gen::b_star, basis(1, 1, -1, 0), qp);
  for (const auto& [x, c] : bs) CHECK(x.l2 == 2);
}

TEST_CASE("adjoint pairs of generators") {
  std::mt19937_64 rng(3);
  const std::pair<Gen, Gen> pairs[] = {{Gen::a, Gen::a_star}, {Gen::b, Gen::b_star}, {Gen::D, Gen::D_star}};
  for (int trial = 0; trial < 40; ++trial) {
    PWVec x = random_vector(rng, 6, 4, 3), y = random_vector(rng, 6, 4, 3);
    for (auto [g, gs] : pairs) {
      cplx lhs = inner(y, apply(g, x, qp));
      cplx rhs = std::conj(inner(x, apply(gs, y, qp)));
      CHECK(std::abs(lhs - rhs) < 1e-12 * (1 + std::abs(lhs)));
    }
  }
}

TEST_CASE("unitarity relations on random vectors") {
  std::mt19937_64 rng(4);
  const double q2 = qp.abs_q * qp.abs_q;
  for (int trial = 0; trial < 30; ++trial) {
    PWVec v = random_vector(rng, 8, 5, 4);
    PWVec r1 = apply_word({Gen::a, Gen::a_star}, v, qp);
    axpy(r1, 1.0, apply_word({Gen::b, Gen::b_star}, v, qp));
    axpy(r1, -1.0, v);
    CHECK(sup_norm(r1) < 1e-12);
    PWVec r2 = apply_word({Gen::a_star, Gen::a}, v, qp);
    axpy(r2, q2, apply_word({Gen::b_star, Gen::b}, v, qp));
    axpy(r2, -1.0, v);
    CHECK(sup_norm(r2) < 1e-12);
  }
}

TEST_CASE("relation residuals on the interior of a window") {
  RelationReport rep = verify_relations_pw(TruncationWindow{6, -6, 6}, qp);
  CHECK(rep.residuals.size() == 8);
  CHECK(rep.vectors > 0);
  CHECK(rep.max() < 1e-12);
}

TEST_CASE("the printed coefficient table breaks the relations") {
  RelationReport rep = verify_relations_pw(TruncationWindow{4, -4, 4}, qp, Coefficients::printed);
  CHECK(rep.max() > 0.1);
  // for theta = 0 both tables coincide
  RelationReport real = verify_relations_pw(TruncationWindow{4, -4, 4}, QParam::make(0.5, 0.0), Coefficients::printed);
  CHECK(real.max() < 1e-12);
}

TEST_CASE("truncated operators") {
  TruncationWindow w{8, -5, 5};
  PWOp D = build_operator(Gen::D, w, qp);
  for (const PWIndex& x : w.indices()) {
    CHECK(x.valid());
    if (x.k <= w.k_min) continue;
    double n = 0.0;
    for (const auto& [y, c] : D.column(x)) n += std::norm(c);
    CHECK(std::abs(n - 1.0) < 1e-14);
  }
  for (const PWIndex& x : w.indices()) {
    if (!w.interior(x)) continue;
    for (Gen g : all_gens)
      for (const auto& [y, c] : apply(g, PWVec{{x, 1.0}}, qp)) CHECK(w.contains(y));
  }
}

TEST_CASE("bb* tridiagonal blocks") {
  for (auto [i2, j2] : std::vector<std::pair<int, int>>{{0, 0}, {1, -1}, {-2, 2}, {3, 1}}) {
    Tridiagonal t = bbstar_tridiagonal(i2, j2, 12, qp);
    CHECK(t.boundary_minus == cplx(0.0));
    const int w2 = std::max(std::abs(i2), std::abs(j2));
    const int k0 = (i2 + j2) / 2;
    for (int m = 0; m < 12; ++m) {
      PWIndex x{w2 + 2 * m, i2, j2, k0 + m};
      PWVec img = apply_word({Gen::b, Gen::b_star}, PWVec{{x, 1.0}}, qp);
      CHECK(std::abs(coefficient(img, x) - t.main[m]) < 1e-14);
      CHECK(std::abs(coefficient(img, {w2 + 2 * m + 2, i2, j2, k0 + m + 1}) - t.sub[m]) < 1e-14);
      CHECK(std::abs(t.sub[m] - std::conj(t.super[m])) < 1e-14);
    }
  }
}

TEST_CASE("bisection and inverse iteration match a dense solver") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    SymTridiag T;
    for (int i = 0; i < 30; ++i) T.d.push_back(nd(rng));
    for (int i = 0; i < 29; ++i) T.e.push_back(nd(rng));
    auto ref = oracle::tridiag_eigenvalues(T.d, T.e);
    auto ev = T.eigenvalues();
    for (int i = 0; i < 30; ++i) {
      CHECK(ev[i] == doctest::Approx(ref[i]).epsilon(1e-12));
      CHECK(T.residual(ev[i], T.eigenvector(ev[i])) < 1e-10);
    }
    CHECK(T.count_below(ref[10] + 1e-9) == 11);
  }
}

TEST_CASE("phase gauge turns a Hermitian tridiagonal matrix real") {
  std::vector<double> d{1.0, -0.5, 2.0, 0.25};
  std::vector<cplx> sub{cplx(0.3, 0.4), cplx(-1.0, 2.0), cplx(0.0, -0.7)};
  GaugedTridiag g = gauge_hermitian(d, sub);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    cplx back = g.gauge[i + 1] * g.real_form.e[i] * std::conj(g.gauge[i]);
    CHECK(std::abs(back - sub[i]) < 1e-15);
    CHECK(g.real_form.e[i] >= 0.0);
  }
}
