#include <cmath>
#include <deque>

#include "uq2/growth.hpp"

namespace uq2 {

bool GammaIndex::valid() const {
  return g1_2 >= 0 && std::abs(g3_2) <= g1_2 && (g1_2 - g3_2) % 2 == 0;
}

double e_gamma_norm(const GammaIndex& g, const QParam& qp) {
  if (!g.valid()) throw std::out_of_range("invalid gamma index");
  return std::pow(qp.abs_q, 0.5 * g.g3_2) / std::sqrt(q_integer(g.g1_2 + 1, qp.abs_q));
}

NormSuprema norm_suprema(const QParam& qp, int g1_max, int g2_max) {
  NormSuprema s;
  for (int g1 = 0; g1 <= g1_max; ++g1)
    for (int g3 = -g1; g3 <= g1; g3 += 2)
      for (int g2 = -g2_max; g2 <= g2_max; ++g2) {
        GammaIndex g{g1, g2, g3};
        double n = e_gamma_norm(g, qp);
        s.d = std::max(s.d, n / e_gamma_norm({g1, g2 + 1, g3}, qp));
        s.d = std::max(s.d, n / e_gamma_norm({g1, g2 - 1, g3}, qp));
        s.a = std::max(s.a, n / e_gamma_norm({g1 + 1, g2, g3 - 1}, qp));
        s.b = std::max(s.b, n / e_gamma_norm({g1 + 1, g2, g3 + 1}, qp));
      }
  s.c = 1.1 * std::max({s.d, s.a, s.b});
  return s;
}

std::vector<GrowthEdge> growth_edges(const GammaIndex& g, const QParam& qp, double c) {
  std::vector<GrowthEdge> out;
  const double n = e_gamma_norm(g, qp);
  auto emit = [&](GammaIndex t, Gen x) {
    double r = n / e_gamma_norm(t, qp);
    if (r < c) out.push_back({t, x, r});
  };
  emit({g.g1_2, g.g2 + 1, g.g3_2}, Gen::D);
  emit({g.g1_2, g.g2 - 1, g.g3_2}, Gen::D_star);
  emit({g.g1_2 + 1, g.g2, g.g3_2 - 1}, Gen::a);
  if (g.g1_2 == g.g3_2) emit({g.g1_2 + 1, g.g2, g.g3_2 + 1}, Gen::b);
  return out;
}

std::map<GammaIndex, int> growth_distances(int n_max, const QParam& qp) {
  const double c = norm_suprema(qp).c;
  std::map<GammaIndex, int> dist;
  std::deque<GammaIndex> queue{GammaIndex{}};
  dist[GammaIndex{}] = 0;
  while (!queue.empty()) {
    GammaIndex g = queue.front();
    queue.pop_front();
    for (const auto& e : growth_edges(g, qp, c)) {
      if (e.target.size() > n_max || dist.contains(e.target)) continue;
      dist[e.target] = dist[g] + 1;
      queue.push_back(e.target);
    }
  }
  return dist;
}

int path_length(const GammaIndex& g, const QParam& qp) {
  if (!g.valid()) throw std::out_of_range("invalid gamma index");
  auto d = growth_distances(g.size(), qp);
  auto it = d.find(g);
  return it == d.end() ? -1 : it->second;
}

std::int64_t L_multiplicity(int n) {
  if (n < 0) throw std::domain_error("L_multiplicity needs n >= 0");
  std::int64_t s = 0;
  for (int g1 = 0; g1 <= n; ++g1) {
    const int rest = n - g1;
    const std::int64_t w = std::int64_t(g1 + 1) * (g1 + 1);
    s += rest == 0 ? w : 2 * w;
  }
  return s;
}

std::vector<double> default_p_grid() {
  std::vector<double> g;
  for (int i = 1; i < 40; ++i) g.push_back(3.0 + 0.05 * i);
  return g;
}

SpecDimEstimate spectral_dimension_estimate(const std::vector<double>& p_grid, int N_max, double ratio_cut,
                                            int octaves) {
  if (N_max < 200) throw std::domain_error("N_max must be at least 200");
  for (double p : p_grid)
    if (!(p > 3.0 && p < 5.0)) throw std::domain_error("p grid must lie in (3, 5)");
  std::vector<double> L(N_max + 1);
  for (int n = 1; n <= N_max; ++n) L[n] = double(L_multiplicity(n));
  int K = 0;
  while ((2 << K) <= N_max + 1) ++K;  // blocks [2^k, 2^{k+1}) for k < K lie inside [1, N_max]
  if (K < octaves + 2) throw std::domain_error("N_max too small for the dyadic test");

  SpecDimEstimate est;
  est.p_grid = p_grid;
  est.lower = 3.0;
  est.upper = 5.0;
  for (double p : p_grid) {
    std::vector<double> B(K, 0.0);
    for (int k = 0; k < K; ++k)
      for (int n = 1 << k; n < (2 << k); ++n) B[k] += L[n] * std::pow(double(n), -p);
    double logr = 0.0;
    for (int k = K - octaves; k < K; ++k) logr += std::log(B[k] / B[k - 1]);
    double ratio = std::exp(logr / octaves);
    est.block_ratio.push_back(ratio);
    est.tail_increment.push_back(L[N_max] * std::pow(double(N_max), -p));
    bool conv = ratio < ratio_cut;
    est.convergent.push_back(conv);
  }
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (est.convergent[i])
      est.upper = std::min(est.upper, p_grid[i]);
    else
      est.lower = std::max(est.lower, p_grid[i]);
  }
  return est;
}

std::vector<bool> cauchy_classify(const std::vector<double>& p_grid, int N_max, double tol) {
  std::vector<bool> out;
  for (double p : p_grid) out.push_back(double(L_multiplicity(N_max)) * std::pow(double(N_max), -p) < tol);
  return out;
}

}  // namespace uq2
