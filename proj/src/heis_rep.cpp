#include "uq2/heis.hpp"

#include <cmath>
#include <numbers>

namespace uq2 {

bool HeisWindow::contains(const HeisIndex& x) const {
  return x.n >= 0 && x.n <= n_max && x.k >= k_min && x.k <= k_max && x.l >= l_min && x.l <= l_max;
}

bool HeisWindow::interior(const HeisIndex& x, int depth) const {
  return contains(x) && x.n + depth <= n_max && x.k - depth >= k_min && x.k + depth <= k_max &&
         x.l - depth >= l_min && x.l + depth <= l_max;
}

std::vector<HeisIndex> HeisWindow::indices() const {
  std::vector<HeisIndex> out;
  for (int n = 0; n <= n_max; ++n)
    for (int k = k_min; k <= k_max; ++k)
      for (int l = l_min; l <= l_max; ++l) out.push_back({n, k, l});
  return out;
}

std::vector<std::pair<HeisIndex, cplx>> heis_action(HeisGen g, const HeisIndex& x, const QParam& qp) {
  const double t2 = qp.abs_q * qp.abs_q;
  const double tau = 2.0 * std::numbers::pi * qp.theta;
  switch (g) {
    case HeisGen::a:
      return {{{x.n + 1, x.k, x.l}, std::sqrt(1.0 - std::pow(t2, x.n + 1))}};
    case HeisGen::a_star:
      if (x.n == 0) return {};
      return {{{x.n - 1, x.k, x.l}, std::sqrt(1.0 - std::pow(t2, x.n))}};
    case HeisGen::b:
      return {{{x.n, x.k + 1, x.l}, qp.qpow(x.n)}};
    case HeisGen::b_star:
      return {{{x.n, x.k - 1, x.l}, qp.qbarpow(x.n)}};
    case HeisGen::D:
    case HeisGen::Dtheta:
      return {{{x.n, x.k, x.l + 1}, std::polar(1.0, -tau * x.k)}};
    case HeisGen::D_star:
      return {{{x.n, x.k, x.l - 1}, std::polar(1.0, tau * x.k)}};
    case HeisGen::a0:
      return {{{x.n + 1, x.k, x.l}, 1.0}};
    case HeisGen::b0:
      if (x.n != 0) return {};
      return {{{0, x.k + 1, x.l}, 1.0}};
    case HeisGen::P:
      if (x.n != 0) return {};
      return {{x, 1.0}};
  }
  return {};
}

HeisOp heis_generator(HeisGen g, const HeisWindow& w, const QParam& qp) {
  HeisOp op;
  for (const HeisIndex& x : w.indices()) {
    auto& col = op.cols[x];
    for (const auto& [y, c] : heis_action(g, x, qp))
      if (w.contains(y)) col.emplace_back(y, c);
  }
  return op;
}

RelationReport relation_residuals_heis(const HeisWindow& w, const QParam& qp) {
  using G = HeisGen;
  std::map<G, HeisOp> ops;
  for (G g : {G::a, G::a_star, G::b, G::b_star, G::D, G::D_star}) ops.emplace(g, heis_generator(g, w, qp));
  auto word = [&](G g, G h, const HeisVec& v) { return ops.at(g).apply(ops.at(h).apply(v)); };
  const cplx q = qp.q;
  const double t2 = qp.abs_q * qp.abs_q;
  const cplx rot = q * q / t2;

  RelationReport rep;
  rep.residuals = {{"ba=qab", 0},    {"a*b=qba*", 0},          {"bb*=b*b", 0}, {"aa*+bb*=1", 0},
                   {"a*a+|q|^2b*b=1", 0}, {"aD=Da", 0}, {"bD=q^2|q|^-2Db", 0}, {"DD*=D*D=1", 0}};
  for (const HeisIndex& x : w.indices()) {
    if (!w.interior(x, 2)) continue;
    ++rep.vectors;
    HeisVec e{{x, 1.0}};
    HeisVec r[9];
    r[0] = word(G::b, G::a, e);
    axpy(r[0], -q, word(G::a, G::b, e));
    r[1] = word(G::a_star, G::b, e);
    axpy(r[1], -q, word(G::b, G::a_star, e));
    r[2] = word(G::b, G::b_star, e);
    axpy(r[2], -1.0, word(G::b_star, G::b, e));
    r[3] = word(G::a, G::a_star, e);
    axpy(r[3], 1.0, word(G::b, G::b_star, e));
    axpy(r[3], -1.0, e);
    r[4] = word(G::a_star, G::a, e);
    axpy(r[4], t2, word(G::b_star, G::b, e));
    axpy(r[4], -1.0, e);
    r[5] = word(G::a, G::D, e);
    axpy(r[5], -1.0, word(G::D, G::a, e));
    r[6] = word(G::b, G::D, e);
    axpy(r[6], -rot, word(G::D, G::b, e));
    r[7] = word(G::D, G::D_star, e);
    axpy(r[7], -1.0, e);
    r[8] = word(G::D_star, G::D, e);
    axpy(r[8], -1.0, e);
    for (int s = 0; s < 9; ++s) {
      double& slot = rep.residuals[std::min(s, 7)].value;
      slot = std::max(slot, l2_norm(r[s]));
    }
  }
  return rep;
}

double compact_difference_profile(int n0, const QParam& qp) {
  // |sqrt(1 - |q|^{2(n+1)}) - 1| decreases in n, so the sup sits at n0
  double x = std::pow(qp.abs_q, 2 * (n0 + 1));
  return x / (1.0 + std::sqrt(1.0 - x));
}

HeisSpectrum spectrum_bbstar_heis(const HeisWindow& w, const QParam& qp) {
  HeisOp b = heis_generator(HeisGen::b, w, qp);
  HeisOp bs = heis_generator(HeisGen::b_star, w, qp);
  HeisSpectrum sp;
  std::map<double, long, std::greater<>> levels;
  const double t2 = qp.abs_q * qp.abs_q;
  for (const HeisIndex& x : w.indices()) {
    if (!w.interior(x, 1)) continue;
    HeisVec v = b.apply(bs.apply(HeisVec{{x, 1.0}}));
    double diag = 0.0;
    for (const auto& [y, c] : v) {
      if (y == x)
        diag = c.real();
      else
        sp.off_diagonal = std::max(sp.off_diagonal, std::abs(c));
    }
    levels[diag] += 1;
    if (diag > 1.0 - 1e-12 && x.n != 0) sp.top_supported_on_n0 = false;
  }
  for (const auto& [v, m] : levels) {
    sp.levels.push_back({v, m});
    double best = v;  // distance to 0
    for (int n = 0; n <= w.n_max + 1; ++n) best = std::min(best, std::abs(v - std::pow(t2, n)));
    sp.level_error = std::max(sp.level_error, best);
  }
  return sp;
}

TorusCompression torus_generators_on_P(const HeisWindow& w, const QParam& qp) {
  TorusCompression tc;
  auto compress = [&](HeisGen g) {
    HeisOp op;
    for (const HeisIndex& x : w.indices()) {
      auto& col = op.cols[x];
      if (x.n != 0) continue;
      for (const auto& [y, c] : heis_action(g, x, qp))
        if (y.n == 0 && w.contains(y)) col.emplace_back(y, c);
    }
    return op;
  };
  tc.Pb = compress(HeisGen::b);
  tc.PD = compress(HeisGen::D);
  HeisOp Pbs = compress(HeisGen::b_star);
  HeisOp PDs = compress(HeisGen::D_star);
  const cplx lam = std::polar(1.0, 2.0 * std::numbers::pi * qp.theta);
  for (const HeisIndex& x : w.indices()) {
    if (x.n != 0 || !w.interior(x, 2)) continue;
    HeisVec e{{x, 1.0}};
    HeisVec r = tc.Pb.apply(tc.PD.apply(e));
    axpy(r, -lam, tc.PD.apply(tc.Pb.apply(e)));
    tc.rotation_residual = std::max(tc.rotation_residual, l2_norm(r));
    for (HeisVec u : {tc.Pb.apply(Pbs.apply(e)), Pbs.apply(tc.Pb.apply(e)), tc.PD.apply(PDs.apply(e)),
                      PDs.apply(tc.PD.apply(e))}) {
      axpy(u, -1.0, e);
      tc.unitarity_residual = std::max(tc.unitarity_residual, l2_norm(u));
    }
  }
  return tc;
}

}  // namespace uq2
