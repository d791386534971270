#include "uq2/qnum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uq2 {

namespace {

void check_t(double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("q-parameter must lie in (0,1)");
}

// (x; t)_k
double pochhammer(double x, double t, int k) {
  double p = 1.0;
  double tk = 1.0;
  for (int s = 0; s < k; ++s) {
    p *= 1.0 - x * tk;
    tk *= t;
  }
  return p;
}

}  // namespace

QParam QParam::make(double abs_q, double theta) {
  if (!(abs_q > 0.0 && abs_q < 1.0)) throw std::domain_error("|q| must lie in (0,1)");
  if (!(theta > -1.0 && theta <= 1.0)) throw std::domain_error("theta must lie in (-1,1]");
  QParam p;
  p.abs_q = abs_q;
  p.theta = theta;
  p.half_phase = std::polar(1.0, std::numbers::pi * theta);
  p.q = abs_q * p.half_phase;
  p.qbar = std::conj(p.q);
  return p;
}

QParam QParam::standard() { return make(0.5, (std::sqrt(5.0) - 1.0) / 2.0); }

cplx QParam::phase(int n) const { return std::polar(1.0, std::numbers::pi * theta * n); }
cplx QParam::qpow(int n) const { return std::polar(std::pow(abs_q, n), std::numbers::pi * theta * n); }
cplx QParam::qbarpow(int n) const { return std::conj(qpow(n)); }
double QParam::tpow(int n) const { return std::pow(abs_q, n); }

double q_integer(int n, double t) {
  check_t(t);
  if (n < 0) throw std::domain_error("q_integer needs n >= 0");
  // t^{-(n-1)} + t^{-(n-3)} + ... + t^{n-1}
  double s = 0.0;
  for (int e = -(n - 1); e <= n - 1; e += 2) s += std::pow(t, e);
  return s;
}

double q_binomial(int n, int k, double t) {
  check_t(t);
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int s = 1; s <= k; ++s) r *= (1.0 - std::pow(t, n - k + s)) / (1.0 - std::pow(t, s));
  return r;
}

std::vector<double> little_q_jacobi_coeffs(int n, int alpha, int beta, double t) {
  check_t(t);
  if (n < 0) throw std::domain_error("little_q_jacobi needs n >= 0");
  std::vector<double> c(n + 1);
  const double tn = std::pow(t, -n);
  const double tab = std::pow(t, alpha + beta + n + 1);
  const double ta = std::pow(t, alpha + 1);
  for (int k = 0; k <= n; ++k) {
    double num = pochhammer(tn, t, k) * pochhammer(tab, t, k);
    double den = pochhammer(ta, t, k) * pochhammer(t, t, k);
    c[k] = num / den * std::pow(t, k);
  }
  return c;
}

double little_q_jacobi(int n, int alpha, int beta, double x, double t) {
  auto c = little_q_jacobi_coeffs(n, alpha, beta, t);
  double s = 0.0;
  for (int k = n; k >= 0; --k) s = s * x + c[k];
  return s;
}

}  // namespace uq2
