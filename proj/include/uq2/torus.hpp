#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "uq2/qnum.hpp"

namespace uq2 {

// sum a_{m,n} u^m v^n with uv = e^{2 pi i theta} vu
struct TorusElement {
  double theta = 0.0;
  std::map<std::pair<int, int>, cplx> coeffs;

  static TorusElement unit(double theta);
  static TorusElement mono(double theta, int m, int n, cplx c = 1.0);
  TorusElement& add(const TorusElement& y, cplx s = 1.0);
  TorusElement& prune(double thresh = 1e-15);
  double l1_norm() const;
  int max_u_degree() const;
};

TorusElement torus_mul(const TorusElement& x, const TorusElement& y);
TorusElement torus_adjoint(const TorusElement& x);
cplx trace(const TorusElement& x);
// delta_1 multiplies u^m v^n by 2 pi i m, delta_2 by 2 pi i n
TorusElement derivation(const TorusElement& x, int axis);

// Largest singular value of x in the circle representation, compressed to 4M sites.
double compression_norm(const TorusElement& x, int M, int samples = 8);

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double default_rieffel_eps(double theta);
TorusElement powers_rieffel(double theta, double eps, int M);
TorusElement powers_rieffel(double theta, int M);

struct RieffelGates {
  double idempotency = 0.0;     // compression norm of p^2 - p
  double self_adjoint = 0.0;    // compression norm of p* - p
  double idempotency_l1 = 0.0;  // l1 coefficient bound on ||p^2 - p||
  double trace_error = 0.0;
};

RieffelGates rieffel_gates(const TorusElement& p, int M);

double chern_number(const TorusElement& p);

// Compressed-multiplier index on l^2(Z^2) in the representation
// u -> U (x) 1, v -> e^{-2 pi i theta N} (x) U, restricted to the box [-L, L]^2.
struct IndexResult {
  int index = 0;
  int kernel = 0;
  int cokernel = 0;
  std::vector<double> kernel_sigma;    // smallest singular-value estimates, ascending
  std::vector<double> cokernel_sigma;
  double gap_ratio = 0.0;              // first uncounted / largest counted (or threshold)
  double interior_weight = 1.0;        // min weight of counted vectors inside radius L/2
  int box = 0;
  bool certified = false;
};

struct InstabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Multiplier = std::function<cplx(int, int)>;

IndexResult compressed_multiplier_index(const TorusElement& p, int L, const Multiplier& f,
                                        double threshold = 1e-3, bool throw_on_gap = true);
// Dirac phase (m + i n)/|m + i n|, equal to 1 at the origin.
cplx dirac_phase(int m, int n);
IndexResult torus_dirac_index(const TorusElement& p, int M, bool throw_on_gap = true);

}  // namespace uq2
