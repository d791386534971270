#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "uq2/pw.hpp"

namespace uq2 {

cplx dirac_eigenvalue(int l2, int i2, int k);
// |d|^2 = (2l+1)^2 + (k-l-i)^2 in exact integer arithmetic
std::int64_t dirac_modulus_sq(int l2, int i2, int k);

// max column norm of [T, g] (or [T*, g]) over depth-1 interior vectors
double commutator_norm(Gen g, const TruncationWindow& w, const QParam& qp, bool adjoint_T = false);
// [T, x] applied to a sparse vector
PWVec dirac_commutator(const AlgebraElement& x, const PWVec& v, const QParam& qp);

std::int64_t eigenvalue_count(double lambda);
std::int64_t eigenvalue_count_k0(double lambda);  // restricted to k = 0
std::int64_t count_upper_bound(int n);             // 4n sum_{m<=n} (2m+1)^2
std::int64_t count_lower_bound(int n);             // (floor(n/4)+1) sum_{m<=floor(n/4)} m^2

// least-squares slope of log count against log lambda on [lo, hi]
double count_slope(double lo, double hi, bool k0_plane = false, int samples = 41);
double summability_slope(double lambda_max);

struct EquivarianceResult {
  double residual = 0.0;          // max |[T, U]| over random j-mixers
  double negative_control = 0.0;  // min over blocks of |[T, l-shift]|
  int trials = 0;
};

EquivarianceResult check_equivariance(const TruncationWindow& w, int trials, std::uint64_t seed);

struct Witness {
  Monomial leading;
  PWIndex source;
  PWIndex target;
  double value = 0.0;
};

// Matrix element of [T, x] between e^1_{0,0,0} and the top-degree target of x.
Witness nondegeneracy_witness(const AlgebraElement& x, const QParam& qp);

struct EvenTripleReport {
  double anticommutator = 0.0;        // D gamma + gamma D
  double grading_commutator = 0.0;    // gamma pi(g) - pi(g) gamma
  double square_residual = 0.0;       // D^2 e vs |d|^2 e
  std::map<Gen, double> doubled_norm; // column norms of [D, pi(g)]
  std::map<Gen, double> reference;    // max(commutator_norm(T), commutator_norm(T*))
};

EvenTripleReport assemble_even_triple(const TruncationWindow& w, const QParam& qp);

struct ResolventReport {
  double base_bound_violation = 0.0;  // max(1/|d|^2 - 1/(2l+1)^2, 0)
  double upper_tail_violation = 0.0;  // k >= 2l
  double lower_tail_violation = 0.0;  // k <= 0
  bool lower_equality_iff_i_minus_l = true;
  bool upper_equality_iff_i_plus_l = true;
  std::vector<std::pair<double, long>> counts;  // (eps, #singular values of |D|^{-1} >= eps)
};

ResolventReport resolvent_decay(const TruncationWindow& w, const std::vector<double>& eps);

}  // namespace uq2
