#pragma once

#include <complex>
#include <vector>

namespace uq2 {

using cplx = std::complex<double>;

// Deformation parameter q = |q| e^{i pi theta}.
struct QParam {
  double abs_q = 0.5;
  double theta = 0.0;
  cplx q;
  cplx qbar;
  cplx half_phase;  // e^{i pi theta}, used as sqrt(q / qbar)

  static QParam make(double abs_q, double theta);
  static QParam standard();  // |q| = 0.5, theta = golden ratio conjugate

  cplx qpow(int n) const;     // q^n
  cplx qbarpow(int n) const;  // conj(q)^n
  cplx phase(int n) const;    // e^{i pi theta n}
  double tpow(int n) const;   // |q|^n
};

double q_integer(int n, double t);
double q_binomial(int n, int k, double t);
double little_q_jacobi(int n, int alpha, int beta, double x, double t);

// Coefficients c_k of P_n(x) = sum_k c_k x^k.
std::vector<double> little_q_jacobi_coeffs(int n, int alpha, int beta, double t);

}  // namespace uq2
