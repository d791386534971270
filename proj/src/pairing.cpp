#include <cmath>
#include <future>
#include <numbers>

#include "uq2/dirac.hpp"
#include "uq2/pairing.hpp"

namespace uq2 {

cplx f0_value(int i2, int j2, int k) {
  const int w2 = std::max(std::abs(i2), std::abs(j2));
  const double re = (i2 == -w2 ? -1.0 : 1.0) * (w2 + 1);
  const cplx z(re, k + 0.5 * (j2 - w2));
  return z / std::abs(z);
}

std::map<E1Label, cplx> f0_operator(int n_r, int x_radius, int k_radius) {
  std::map<E1Label, cplx> out;
  for (int x = -x_radius; x <= x_radius; ++x)
    for (int k = -k_radius; k <= k_radius; ++k) {
      E1Label l{n_r + x, n_r - x, k};
      out[l] = f0_value(l.i2, l.j2, l.k);
    }
  return out;
}

std::pair<int, int> label_to_site(int n_r, const E1Label& l) {
  const int x = l.i2 - n_r;
  return {-x, -(l.k - std::max(x, 0))};
}

E1Label site_to_label(int n_r, int m, int n) {
  const int x = -m;
  return {n_r + x, n_r - x, -n + std::max(x, 0)};
}

cplx block_multiplier(int n_r, int m, int n) {
  E1Label l = site_to_label(n_r, m, n);
  return f0_value(l.i2, l.j2, l.k);
}

BlockModel block_model(E1Basis& basis, int r, int box) {
  const OmegaSet& om = basis.omega();
  if (r < 0 || r >= int(om.levels.size())) throw LevelNotDetected("level " + std::to_string(r) + " not detected");
  const QParam& qp = basis.qparam();
  BlockModel bm;
  bm.level = r;
  bm.n_r = om.levels[r];
  bm.box = box;
  std::map<std::pair<int, int>, PWVec> cache;
  auto vec = [&](int m, int n) -> const PWVec& {
    auto it = cache.find({m, n});
    if (it != cache.end()) return it->second;
    E1Label l = site_to_label(bm.n_r, m, n);
    return cache[{m, n}] = basis.vector(l.i2, l.j2, l.k).vec;
  };
  for (int n = -box + 1; n < box; ++n)
    for (int m = -box + 1; m < box; ++m) {
      const PWVec& v = vec(m, n);
      PWVec bv = apply(Gen::b, v, qp);
      axpy(bv, cplx(-1.0), vec(m + 1, n));
      bm.pb_residual = std::max(bm.pb_residual, l2_norm(bv));
      PWVec dv = apply(Gen::D, v, qp);
      axpy(dv, -std::polar(1.0, -2.0 * std::numbers::pi * std::remainder(qp.theta * m, 1.0)), vec(m, n + 1));
      bm.pd_residual = std::max(bm.pd_residual, l2_norm(dv));
      bm.f_unimodular = std::max(bm.f_unimodular, std::abs(std::abs(block_multiplier(bm.n_r, m, n)) - 1.0));
      ++bm.vectors;
    }
  return bm;
}

PairingResult pairing_index(const OmegaSet& omega, const std::vector<int>& levels, int box, int M, double theta) {
  for (int r : levels)
    if (r < 0 || r >= int(omega.levels.size()))
      throw LevelNotDetected("level " + std::to_string(r) + " not detected");
  const TorusElement p = powers_rieffel(theta, M);
  PairingResult out;
  std::vector<std::future<IndexResult>> jobs;
  for (int r : levels) {
    const int n_r = omega.levels[r];
    out.levels.push_back(r);
    out.n_r.push_back(n_r);
    jobs.push_back(std::async(std::launch::async, [&p, box, n_r] {
      return compressed_multiplier_index(p, box, [n_r](int m, int n) { return block_multiplier(n_r, m, n); });
    }));
  }
  for (auto& j : jobs) {
    out.per_level.push_back(j.get());
    out.total += out.per_level.back().index;
  }
  return out;
}

CompactProfile compact_part_profile(E1Basis& basis, int n_r, int x_max, int k_radius) {
  std::vector<double> diff(x_max + 1, 0.0), decay(x_max + 1, 0.0);
  for (int x = -x_max; x <= x_max; ++x)
    for (int k = -k_radius; k <= k_radius; ++k) {
      FixedVector fv = basis.vector(n_r + x, n_r - x, k);
      cplx diag = 0.0;
      for (const auto& [idx, c] : fv.vec) {
        cplx d = dirac_eigenvalue(idx.l2, idx.i2, idx.k);
        diag += std::norm(c) * d / std::abs(d);
      }
      const int a = std::abs(x);
      diff[a] = std::max(diff[a], std::abs(diag - f0_value(fv.i2, fv.j2, fv.k)));
      decay[a] = std::max(decay[a], fv.tail_weight());
    }
  CompactProfile out;
  double dn = 0.0, dc = 0.0;
  for (int w = x_max; w >= 0; --w) {
    dn = std::max(dn, diff[w]);
    dc = std::max(dc, decay[w]);
    out.windows.insert(out.windows.begin(), w);
    out.norm.insert(out.norm.begin(), dn);
    out.decay.insert(out.decay.begin(), dc);
  }
  for (std::size_t w = 1; w < out.norm.size(); ++w)
    if (out.norm[w] > out.norm[w - 1] || (out.norm[w - 1] > 1e-15 && !(out.norm[w] < out.norm[w - 1])))
      out.monotone = false;
  return out;
}

}  // namespace uq2
