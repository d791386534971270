#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "uq2/growth.hpp"

using namespace uq2;

namespace {
const QParam qp = QParam::standard();
}

TEST_CASE("highest-weight norms") {
  CHECK(e_gamma_norm({0, 0, 0}, qp) == 1.0);
  CHECK(e_gamma_norm({2, 5, -2}, qp) == doctest::Approx(std::pow(0.5, -1.0) / std::sqrt(oracle::q_integer(3, 0.5))));
  for (int g1 = 0; g1 <= 10; ++g1)
    for (int g3 = -g1; g3 <= g1; g3 += 2)
      CHECK(e_gamma_norm({g1, 3, g3}, qp) == e_gamma_norm({g1, 4, g3}, qp));
  CHECK_THROWS_AS(e_gamma_norm({1, 0, 0}, qp), std::out_of_range);
  CHECK_THROWS_AS(e_gamma_norm({1, 0, 3}, qp), std::out_of_range);
}

TEST_CASE("norm-ratio suprema") {
  for (double t : {0.2, 0.5, 0.9}) {
    QParam p = QParam::make(t, 0.3);
    NormSuprema s = norm_suprema(p);
    CHECK(s.d == 1.0);
    CHECK(s.a == doctest::Approx(std::sqrt(1 + t * t)).epsilon(1e-12));
    CHECK(s.b == doctest::Approx(std::sqrt(1 + t * t) / t).epsilon(1e-12));
    CHECK(s.b <= std::sqrt(2.0) / t);
    CHECK(s.c == doctest::Approx(1.1 * s.b));
  }
}

TEST_CASE("growth-graph edges") {
  const double c = norm_suprema(qp).c;
  auto root = growth_edges({0, 0, 0}, qp, c);
  REQUIRE(root.size() == 4);
  CHECK(root[0].target == GammaIndex{0, 1, 0});
  CHECK(root[1].target == GammaIndex{0, -1, 0});
  CHECK(root[2].target == GammaIndex{1, 0, -1});
  CHECK(root[3].target == GammaIndex{1, 0, 1});
  CHECK(growth_edges({1, 0, -1}, qp, c).size() == 3);
  for (const auto& e : growth_edges({4, -2, 4}, qp, c)) CHECK(e.ratio < c);
}

TEST_CASE("breadth-first distances equal 2 gamma_1 + |gamma_2|") {
  auto d = growth_distances(14, qp);
  for (int g1 = 0; g1 <= 14; ++g1)
    for (int g3 = -g1; g3 <= g1; g3 += 2)
      for (int g2 = -(14 - g1); g2 <= 14 - g1; ++g2) {
        GammaIndex g{g1, g2, g3};
        REQUIRE(d.contains(g));
        CHECK(d.at(g) == g.size());
      }
  CHECK(path_length({0, 0, 0}, qp) == 0);
  CHECK(path_length({2, 3, 0}, qp) <= 5);
  CHECK(path_length({6, 0, -2}, qp) == 6);
}

TEST_CASE("multiplicities of the length operator") {
  CHECK(L_multiplicity(0) == 1);
  CHECK(L_multiplicity(1) == 6);
  for (int n = 0; n <= 300; ++n) CHECK(L_multiplicity(n) == oracle::L_multiplicity(n));
  for (int n = 16; n <= 200; ++n)
    CHECK(double(L_multiplicity(2 * n)) / double(L_multiplicity(n)) == doctest::Approx(8.0).epsilon(0.15));
  // partial sums grow like N^4
  auto S = [](int N) {
    double s = 0.0;
    for (int n = 0; n <= N; ++n) s += double(L_multiplicity(n));
    return s;
  };
  CHECK(std::log(S(2000) / S(1000)) / std::log(2.0) == doctest::Approx(4.0).epsilon(0.01));
  CHECK_THROWS_AS(L_multiplicity(-1), std::domain_error);
}

TEST_CASE("spectral dimension classification") {
  SpecDimEstimate est = spectral_dimension_estimate({3.5, 4.5}, 10000);
  CHECK_FALSE(est.convergent[0]);
  CHECK(est.convergent[1]);
  SpecDimEstimate full = spectral_dimension_estimate(default_p_grid(), 10000);
  CHECK(full.lower >= 3.8);
  CHECK(full.upper <= 4.2);
  CHECK(full.lower <= 4.0);
  CHECK(full.upper >= 4.0);
  CHECK_THROWS_AS(spectral_dimension_estimate({4.0}, 100), std::domain_error);
  CHECK_THROWS_AS(spectral_dimension_estimate({5.5}, 1000), std::domain_error);
}
