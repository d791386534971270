#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "uq2/pw.hpp"
#include "uq2/tridiag.hpp"

namespace uq2 {

// Coefficients of bb* on span{e^m_{0,0,m}}: xi = -1, 0, 1 for targets m-1, m, m+1.
double upsilon(int xi, int m, const QParam& qp);
double closed_form_c(int m, const QParam& qp);
// max over m <= m_top of |(bb* c)_m - c_m| / |c_m| for the closed form
double closed_form_residual(int m_top, const QParam& qp);
// |<closed form, top eigenvector of the m_max block>| with both normalized
double closed_form_overlap(int m_max, const QParam& qp);

struct RecurrenceResult {
  bool summable = false;
  std::vector<cplx> c;             // normalized minimal solution when summable
  std::vector<cplx> forward;       // forward solution with c_0 = 1 (rescaled on overflow)
  double boundary_residual = 0.0;  // first equation evaluated on the minimal solution
  double tail_ratio = 0.0;         // mean |c_{m+1}/c_m| over the last quartile of `forward`
};

RecurrenceResult solve_recurrence(double lambda, int i2, int j2, int m_max, const QParam& qp, double tol = 1e-9);
// Forward recurrence from (c_0, c_1 from the first equation); used for the c_0 = 0 law.
std::vector<cplx> forward_recurrence(double lambda, cplx c0, int i2, int j2, int m_max, const QParam& qp);

struct BlockEigen {
  double value;
  std::vector<cplx> vector;  // in the original (ungauged) basis
  double residual;
};

// Eigenpair of the truncated bb* block A(i,j,.) nearest to `target`.
BlockEigen block_eigenpair(int i2, int j2, int m_max, double target, const QParam& qp);
std::vector<double> block_spectrum(int i2, int j2, int m_max, const QParam& qp);

struct OmegaSet {
  std::vector<int> levels;           // detected n_r, increasing
  std::vector<double> eigenvalues;   // all truncated eigenvalues, descending
  std::vector<double> unmatched;     // eigenvalues not certified as |q|^{2n}
  double spectrum_distance = 0.0;    // max distance of any eigenvalue to {|q|^{2n}} u {0}
  bool contains(int n) const;
};

OmegaSet omega_detect(int n_max, int m_max, const QParam& qp, double tol = 1e-6);

struct LevelNotDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixedVector {
  int i2 = 0;
  int j2 = 0;
  int k = 0;
  std::vector<cplx> c;      // c_m on e^{w+m}_{i,j,i+j+k+m}
  PWVec vec;                // full sparse vector
  double leakage = 0.0;     // norm outside the A-block
  double bbstar_residual = 0.0;
  int level() const { return (i2 + j2) / 2; }
  double tail_weight() const;  // C_{i,j,k} = sum_{m>=1} |c_m|^2
};

// Builds |i,j,k> from the level-(i+j) seed. Seeds are cached per level.
class E1Basis {
 public:
  E1Basis(QParam qp, int m_max, int n_max_detect = 12);

  const OmegaSet& omega() const { return omega_; }
  const QParam& qparam() const { return qp_; }
  const PWVec& seed(int n_r);
  FixedVector vector(int i2, int j2, int k);

 private:
  QParam qp_;
  int m_max_;
  OmegaSet omega_;
  std::map<int, PWVec> seeds_;
};

FixedVector e1_vector(int i2, int j2, int k, int m_max, const QParam& qp);

struct E1ActionReport {
  double b_residual = 0.0;
  double b_star_residual = 0.0;
  double D_residual = 0.0;
  double min_overlap = 1.0;
  double norm_error = 0.0;      // | ||b v|| - 1 |
  double gram_error = 0.0;
  double bbstar_residual = 0.0;
  double leakage = 0.0;
  double k_independence = 0.0;  // spread of C_{i,j,k} over k
  double decay_violation = 0.0; // max(|c_m| - |q|^{m(n_r-2i)}/(1-|q|)^2, 0) for i < n_r/2
  int vectors = 0;
  double max() const;
};

E1ActionReport verify_e1_actions(int n_r, int i_radius, int k_radius, int m_max, const QParam& qp);

}  // namespace uq2
