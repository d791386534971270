#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "uq2/pairing.hpp"

using namespace uq2;

TEST_CASE("diagonal values of F") {
  CHECK(f0_value(0, 0, 0) == cplx(-1.0, 0.0));
  CHECK(std::abs(f0_value(1, -1, 0) - cplx(2.0, -1.0) / std::sqrt(5.0)) < 1e-15);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int t = 0; t < 100; ++t) {
    int i2 = d(rng), j2 = d(rng);
    if ((i2 + j2) % 2) ++j2;
    CHECK(std::abs(std::abs(f0_value(i2, j2, d(rng))) - 1.0) < 1e-15);
  }
  auto F = f0_operator(1, 2, 3);
  CHECK(F.size() == 35);
  for (const auto& [l, v] : F) CHECK(l.i2 + l.j2 == 2);
}

TEST_CASE("relabeling between E1 labels and lattice sites") {
  for (int n_r : {0, 1, 3})
    for (int m = -6; m <= 6; ++m)
      for (int n = -6; n <= 6; ++n) {
        E1Label l = site_to_label(n_r, m, n);
        CHECK(l.i2 + l.j2 == 2 * n_r);
        CHECK(label_to_site(n_r, l) == std::pair{m, n});
        CHECK(block_multiplier(n_r, m, n) == f0_value(l.i2, l.j2, l.k));
      }
}

TEST_CASE("block model reproduces the torus representation") {
  E1Basis basis(QParam::standard(), 30);
  for (int r : {0, 1}) {
    BlockModel bm = block_model(basis, r, 4);
    CHECK(bm.n_r == basis.omega().levels[r]);
    CHECK(bm.vectors == 49);
    CHECK(bm.pb_residual < 1e-8);
    CHECK(bm.pd_residual < 1e-8);
    CHECK(bm.f_unimodular < 1e-14);
  }
  CHECK_THROWS_AS(block_model(basis, 1000, 4), LevelNotDetected);
}

TEST_CASE("index pairing is concentrated on level 0") {
  const QParam qp = QParam::standard();
  OmegaSet om = omega_detect(12, 30, qp);
  PairingResult pr = pairing_index(om, {0, 1, 2}, 16, 32, qp.theta);
  REQUIRE(pr.per_level.size() == 3);
  IndexResult torus = torus_dirac_index(powers_rieffel(qp.theta, 32), 32);
  CHECK(pr.per_level[0].index == torus.index);
  CHECK(pr.per_level[0].index != 0);
  CHECK(pr.per_level[1].index == 0);
  CHECK(pr.per_level[2].index == pr.per_level[1].index);
  CHECK(pr.total == pr.per_level[0].index);
  for (const auto& r : pr.per_level) CHECK(r.certified);
  CHECK_THROWS_AS(pairing_index(om, {500}, 8, 16, qp.theta), LevelNotDetected);
}

TEST_CASE("compact part shrinks on nested windows") {
  E1Basis basis(QParam::standard(), 30);
  for (int n_r : {0, 1}) {
    CompactProfile cp = compact_part_profile(basis, n_r, 5, 3);
    CHECK(cp.monotone);
    REQUIRE(cp.norm.size() == 6);
    for (std::size_t w = 1; w < cp.norm.size(); ++w) {
      CHECK(cp.norm[w] < cp.norm[w - 1]);
      CHECK(cp.decay[w] < cp.decay[w - 1]);
    }
  }
}
