#pragma once

#include <vector>

#include "uq2/qnum.hpp"

namespace uq2 {

// Real symmetric tridiagonal matrix: diagonal d (size n), off-diagonal e (size n-1).
struct SymTridiag {
  std::vector<double> d;
  std::vector<double> e;

  std::size_t size() const { return d.size(); }
  // number of eigenvalues strictly below x
  int count_below(double x) const;
  // k-th smallest eigenvalue by bisection, to relative precision
  double eigenvalue(int k) const;
  std::vector<double> eigenvalues() const;  // ascending
  // unit eigenvector for a (converged) eigenvalue by inverse iteration
  std::vector<double> eigenvector(double lambda) const;
  double residual(double lambda, const std::vector<double>& v) const;
};

// Hermitian tridiagonal with lower entries `sub`; `gauge` maps the real form back:
// H = G S G^*, G = diag(gauge).
struct GaugedTridiag {
  SymTridiag real_form;
  std::vector<cplx> gauge;
};

GaugedTridiag gauge_hermitian(const std::vector<double>& diag, const std::vector<cplx>& sub);

}  // namespace uq2
