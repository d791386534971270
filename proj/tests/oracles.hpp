#pragma once
// Test-side reference implementations, written independently of the library code paths.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// (t^{-n} - t^n) / (t^{-1} - t)
inline double q_integer(int n, double t) { return (std::pow(t, -n) - std::pow(t, n)) / (1.0 / t - t); }

// Gaussian binomial via the Pascal rule [n,k] = [n-1,k-1] + t^k [n-1,k]
inline double q_binomial(int n, int k, double t) {
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(n + 1, 0.0));
  for (int a = 0; a <= n; ++a) {
    c[a][0] = 1.0;
    for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + std::pow(t, b) * (b <= a - 1 ? c[a - 1][b] : 0.0);
  }
  return (k < 0 || k > n) ? 0.0 : c[n][k];
}

inline double qpoch(double a, double t, int k) {
  double r = 1.0;
  for (int s = 0; s < k; ++s) r *= 1.0 - a * std::pow(t, s);
  return r;
}

// Orthogonality pairing of little q-Jacobi polynomials with a = t^alpha, b = t^beta:
// sum_x (bt; t)_x / (t; t)_x (at)^x p_m(t^x) p_n(t^x)
template <class P>
double jacobi_pairing(P&& p, int m, int n, int alpha, int beta, double t, int terms = 400) {
  const double a = std::pow(t, alpha), b = std::pow(t, beta);
  double s = 0.0;
  for (int x = 0; x < terms; ++x) {
    double w = qpoch(b * t, t, x) / qpoch(t, t, x) * std::pow(a * t, x);
    double y = std::pow(t, x);
    s += w * p(m, y) * p(n, y);
  }
  return s;
}

// Brute-force count of Dirac eigenvalues with |d| <= lambda, counting the j multiplicity.
inline std::int64_t dirac_count(double lambda) {
  std::int64_t c = 0;
  for (int l2 = 0; l2 + 1 <= lambda; ++l2)
    for (int i2 = -l2; i2 <= l2; i2 += 2) {
      int kmax = int(std::ceil(lambda)) + l2 + 2;
      for (int k = -kmax; k <= kmax; ++k) {
        double re = l2 + 1.0, im = (i2 == -l2) ? double(k) : k - (l2 + i2) / 2.0;
        if (re * re + im * im <= lambda * lambda) c += l2 + 1;
      }
    }
  return c;
}

// L(n) = (n+1)^2 + 2 sum_{a<n} (a+1)^2
inline std::int64_t L_multiplicity(int n) {
  std::int64_t nn = n;
  return (nn + 1) * (nn + 1) + nn * (nn + 1) * (2 * nn + 1) / 3;
}

// Dense eigenvalues of a real symmetric tridiagonal matrix.
inline std::vector<double> tridiag_eigenvalues(const std::vector<double>& d, const std::vector<double>& e) {
  const int n = int(d.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) A(i, i) = d[i];
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = A(i + 1, i) = e[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  return {es.eigenvalues().data(), es.eigenvalues().data() + n};
}

// Torus element as a matrix on sites 0..n-1 of l^2(Z): u e_j = e^{2 pi i (x0 + j theta)} e_j, v e_j = e_{j+1}.
inline Eigen::MatrixXcd circle_matrix(const std::map<std::pair<int, int>, cplx>& coeffs, double theta, int n, double x0) {
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(n, n), V = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) U(j, j) = std::polar(1.0, 2 * std::numbers::pi * (x0 + j * theta));
  for (int j = 0; j + 1 < n; ++j) V(j + 1, j) = 1.0;
  Eigen::MatrixXcd Ui = U.adjoint();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [k, c] : coeffs) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(n, n);
    for (int s = 0; s < std::abs(k.first); ++s) A = (k.first > 0 ? U : Ui) * A;
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Identity(n, n);
    for (int s = 0; s < std::abs(k.second); ++s) B = (k.second > 0 ? V : Eigen::MatrixXcd(V.adjoint())) * B;
    out += c * A * B;
  }
  return out;
}

}  // namespace oracle
