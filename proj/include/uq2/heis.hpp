#pragma once

#include <compare>
#include <vector>

#include "uq2/pw.hpp"

namespace uq2 {

// Basis e_n (x) e_k (x) e_l of l^2(N) (x) l^2(Z) (x) l^2(Z).
struct HeisIndex {
  int n = 0;
  int k = 0;
  int l = 0;
  auto operator<=>(const HeisIndex&) const = default;
};

using HeisVec = SparseVec<HeisIndex>;
using HeisOp = SparseOp<HeisIndex>;

enum class HeisGen { a, a_star, b, b_star, D, D_star, a0, b0, Dtheta, P };

struct HeisWindow {
  int n_max = 40;
  int k_min = -20;
  int k_max = 20;
  int l_min = -20;
  int l_max = 20;

  bool contains(const HeisIndex& x) const;
  bool interior(const HeisIndex& x, int depth = 1) const;
  std::vector<HeisIndex> indices() const;
};

// Image of one basis vector under the untruncated operator.
std::vector<std::pair<HeisIndex, cplx>> heis_action(HeisGen g, const HeisIndex& x, const QParam& qp);
HeisOp heis_generator(HeisGen g, const HeisWindow& w, const QParam& qp);

RelationReport relation_residuals_heis(const HeisWindow& w, const QParam& qp);

double compact_difference_profile(int n0, const QParam& qp);

struct SpectrumLevel {
  double value;
  long multiplicity;
};

struct HeisSpectrum {
  std::vector<SpectrumLevel> levels;  // descending
  double off_diagonal = 0.0;          // largest off-diagonal entry of b b* on interior vectors
  double level_error = 0.0;           // distance of each level to the nearest |q|^{2n}
  bool top_supported_on_n0 = true;
};

HeisSpectrum spectrum_bbstar_heis(const HeisWindow& w, const QParam& qp);

struct TorusCompression {
  HeisOp Pb;
  HeisOp PD;
  double rotation_residual = 0.0;  // (Pb)(PD) - e^{2 pi i theta} (PD)(Pb)
  double unitarity_residual = 0.0;
};

TorusCompression torus_generators_on_P(const HeisWindow& w, const QParam& qp);

}  // namespace uq2
