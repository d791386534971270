#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "uq2/algebra.hpp"
#include "uq2/qnum.hpp"

namespace uq2 {

// gamma = (g1_2 / 2, g2, g3_2 / 2)
struct GammaIndex {
  int g1_2 = 0;
  int g2 = 0;
  int g3_2 = 0;
  auto operator<=>(const GammaIndex&) const = default;
  bool valid() const;
  int size() const { return g1_2 + std::abs(g2); }  // 2 gamma_1 + |gamma_2|
};

double e_gamma_norm(const GammaIndex& g, const QParam& qp);

struct NormSuprema {
  double d = 0.0;       // over gamma -> gamma + eps_2
  double a = 0.0;       // over gamma -> gamma + eps_1 - eps_3
  double b = 0.0;       // over gamma -> gamma + eps_1 + eps_3
  double c = 0.0;       // admission constant: 1.1 * max
};

// Suprema of the three norm ratios over 2 gamma_1 <= g1_max, |gamma_2| <= g2_max.
NormSuprema norm_suprema(const QParam& qp, int g1_max = 40, int g2_max = 20);

struct GrowthEdge {
  GammaIndex target;
  Gen gen;
  double ratio;  // ||e^gamma|| / ||e^target||
};

std::vector<GrowthEdge> growth_edges(const GammaIndex& g, const QParam& qp, double c);

// Breadth-first distances from the root over all gamma with 2 gamma_1 + |gamma_2| <= n_max.
std::map<GammaIndex, int> growth_distances(int n_max, const QParam& qp);
int path_length(const GammaIndex& g, const QParam& qp);

std::int64_t L_multiplicity(int n);

struct SpecDimEstimate {
  std::vector<double> p_grid;
  std::vector<bool> convergent;
  std::vector<double> block_ratio;  // fitted ratio of consecutive dyadic block sums
  std::vector<double> tail_increment;  // last Cauchy increment of the partial sums
  double lower = 0.0;  // largest divergent p
  double upper = 0.0;  // smallest convergent p
  double threshold() const { return upper; }
};

// Dyadic block test on sum_n L(n) n^{-p}: convergent iff the block ratio over the last
// octaves below N_max stays under `ratio_cut`.
SpecDimEstimate spectral_dimension_estimate(const std::vector<double>& p_grid, int N_max, double ratio_cut = 0.99,
                                            int octaves = 4);
// Literal Cauchy-increment classification: convergent iff the last increment is below tol.
std::vector<bool> cauchy_classify(const std::vector<double>& p_grid, int N_max, double tol = 1e-6);

std::vector<double> default_p_grid();

}  // namespace uq2
