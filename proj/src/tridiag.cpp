#include "uq2/tridiag.hpp"

#include <cmath>
#include <limits>

namespace uq2 {

int SymTridiag::count_below(double x) const {
  // Sturm count from the pivots of T - xI = LDL^T
  const double tiny = std::numeric_limits<double>::min();
  int c = 0;
  double p = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double off = i == 0 ? 0.0 : e[i - 1] * e[i - 1] / p;
    p = d[i] - x - off;
    if (p == 0.0) p = -tiny;
    if (p < 0.0) ++c;
  }
  return c;
}

double SymTridiag::eigenvalue(int k) const {
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < d.size() ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < 2000; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    if (count_below(mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> SymTridiag::eigenvalues() const {
  std::vector<double> out;
  for (std::size_t k = 0; k < d.size(); ++k) out.push_back(eigenvalue(int(k)));
  return out;
}

std::vector<double> SymTridiag::eigenvector(double lambda) const {
  const std::size_t n = d.size();
  std::vector<double> x(n, 1.0);
  if (n == 1) return x;
  const double shift = lambda + 4 * std::numeric_limits<double>::epsilon() * std::max(1e-300, std::abs(lambda));
  for (int it = 0; it < 4; ++it) {
    // Gaussian elimination with partial pivoting on the tridiagonal T - shift
    std::vector<double> a(n), b(n), c(n, 0.0), f(n, 0.0), rhs = x;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = i > 0 ? e[i - 1] : 0.0;  // sub
      b[i] = d[i] - shift;            // diag
      if (i + 1 < n) c[i] = e[i];     // super
    }
    // row i holds (b[i], c[i], f[i]) in columns (i, i+1, i+2) after elimination
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double sub = a[i + 1];
      if (std::abs(sub) > std::abs(b[i])) {
        std::swap(b[i], a[i + 1]);
        std::swap(c[i], b[i + 1]);
        std::swap(f[i], c[i + 1]);
        std::swap(rhs[i], rhs[i + 1]);
        sub = a[i + 1];
      }
      if (b[i] == 0.0) b[i] = std::numeric_limits<double>::min();
      double m = sub / b[i];
      b[i + 1] -= m * c[i];
      c[i + 1] -= m * f[i];
      rhs[i + 1] -= m * rhs[i];
    }
    if (b[n - 1] == 0.0) b[n - 1] = std::numeric_limits<double>::min();
    for (std::size_t ii = n; ii-- > 0;) {
      double s = rhs[ii];
      if (ii + 1 < n) s -= c[ii] * x[ii + 1];
      if (ii + 2 < n) s -= f[ii] * x[ii + 2];
      x[ii] = s / b[ii];
    }
    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : x) v /= nrm;
  }
  // sign convention: first nonzero component positive
  for (double v : x)
    if (v != 0.0) {
      if (v < 0)
        for (double& w : x) w = -w;
      break;
    }
  return x;
}

double SymTridiag::residual(double lambda, const std::vector<double>& v) const {
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double r = (d[i] - lambda) * v[i];
    if (i > 0) r += e[i - 1] * v[i - 1];
    if (i + 1 < d.size()) r += e[i] * v[i + 1];
    s += r * r;
  }
  return std::sqrt(s);
}

GaugedTridiag gauge_hermitian(const std::vector<double>& diag, const std::vector<cplx>& sub) {
  GaugedTridiag g;
  g.real_form.d = diag;
  g.gauge.assign(diag.size(), 1.0);
  for (std::size_t m = 0; m < sub.size(); ++m) {
    double a = std::abs(sub[m]);
    g.real_form.e.push_back(a);
    g.gauge[m + 1] = a == 0.0 ? g.gauge[m] : g.gauge[m] * sub[m] / a;
  }
  return g;
}

}  // namespace uq2
