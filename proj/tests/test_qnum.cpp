#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "uq2/qnum.hpp"

using namespace uq2;

TEST_CASE("q-integers match the closed form") {
  for (double t : {0.1, 0.5, 0.9})
    for (int n = 1; n <= 25; ++n) CHECK(q_integer(n, t) == doctest::Approx(oracle::q_integer(n, t)).epsilon(1e-12));
  CHECK(q_integer(0, 0.5) == 0.0);
  CHECK(q_integer(1, 0.5) == 1.0);
  CHECK(q_integer(2, 0.5) == doctest::Approx(2.5));
}

TEST_CASE("Gaussian binomials satisfy the Pascal rule") {
  for (double t : {0.25, 0.5, 0.81})
    for (int n = 0; n <= 14; ++n)
      for (int k = 0; k <= n; ++k) {
        CHECK(q_binomial(n, k, t) == doctest::Approx(oracle::q_binomial(n, k, t)).epsilon(1e-12));
        CHECK(q_binomial(n, k, t) == doctest::Approx(q_binomial(n, n - k, t)).epsilon(1e-12));
      }
  CHECK(q_binomial(5, -1, 0.5) == 0.0);
  CHECK(q_binomial(5, 6, 0.5) == 0.0);
}

TEST_CASE("little q-Jacobi polynomials are orthogonal for the discrete weight") {
  const double t = 0.25;
  for (int alpha : {0, 1, 3})
    for (int beta : {0, 2}) {
      auto p = [&](int n, double x) { return little_q_jacobi(n, alpha, beta, x, t); };
      // evaluation with |coefficients| bounds the rounding in p(n, x)
      auto pa = [&](int n, double x) {
        auto c = little_q_jacobi_coeffs(n, alpha, beta, t);
        double s = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + std::abs(*it);
        return s;
      };
      for (int m = 0; m <= 5; ++m) {
        CHECK(p(m, 0.0) == doctest::Approx(1.0));
        const double hm = oracle::jacobi_pairing(p, m, m, alpha, beta, t);
        CHECK(hm > 0.0);
        for (int n = 0; n < m; ++n) {
          const double scale = oracle::jacobi_pairing(pa, m, n, alpha, beta, t);
          CHECK(std::abs(oracle::jacobi_pairing(p, m, n, alpha, beta, t)) < 1e-12 * scale);
        }
      }
    }
}

TEST_CASE("Horner evaluation agrees with the coefficient list") {
  auto c = little_q_jacobi_coeffs(4, 2, 1, 0.3);
  REQUIRE(c.size() == 5);
  double x = 0.37, s = 0.0;
  for (int k = 0; k <= 4; ++k) s += c[k] * std::pow(x, k);
  CHECK(little_q_jacobi(4, 2, 1, x, 0.3) == doctest::Approx(s).epsilon(1e-13));
}

TEST_CASE("QParam powers and phase") {
  QParam qp = QParam::make(0.6, 0.3);
  CHECK(std::abs(qp.q - std::polar(0.6, std::numbers::pi * 0.3)) < 1e-15);
  CHECK(std::abs(qp.half_phase * qp.half_phase - qp.q / qp.qbar) < 1e-15);
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) CHECK(std::abs(qp.qpow(a) * qp.qpow(b) - qp.qpow(a + b)) < 1e-12);
  CHECK(std::abs(qp.qbarpow(3) - std::conj(qp.q * qp.q * qp.q)) < 1e-15);
  CHECK(qp.tpow(2) == doctest::Approx(0.36));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(QParam::make(1.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(QParam::make(0.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(q_integer(-1, 0.5), std::domain_error);
  CHECK_THROWS_AS(q_integer(3, 1.5), std::domain_error);
  CHECK_THROWS_AS(little_q_jacobi(-1, 0, 0, 0.2, 0.5), std::domain_error);
}
