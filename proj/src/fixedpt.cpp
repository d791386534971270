#include "uq2/fixedpt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace uq2 {

double upsilon(int xi, int m, const QParam& qp) {
  const double t = qp.abs_q;
  auto p = [t](int e) { return std::pow(t, e); };
  switch (xi) {
    case -1:
      if (m == 0) return 0.0;
      return -p(2 * m - 1) * std::pow(1 - p(2 * m), 2) /
             ((1 - p(4 * m)) * std::sqrt((1 - p(4 * m - 2)) * (1 - p(4 * m + 2))));
    case 0: {
      double r = p(2 * m) * std::pow(1 - p(2 * m + 2), 2) / ((1 - p(4 * m + 2)) * (1 - p(4 * m + 4)));
      if (m > 0) r += p(2 * m) * std::pow(1 - p(2 * m), 2) / ((1 - p(4 * m)) * (1 - p(4 * m + 2)));
      return r;
    }
    case 1:
      return -p(2 * m + 1) * std::pow(1 - p(2 * m + 2), 2) /
             ((1 - p(4 * m + 4)) * std::sqrt((1 - p(4 * m + 2)) * (1 - p(4 * m + 6))));
  }
  throw std::invalid_argument("upsilon index must be -1, 0 or 1");
}

double closed_form_c(int m, const QParam& qp) {
  const double t = qp.abs_q;
  double sign = m % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(t, double(m) * m) * std::sqrt((1 - std::pow(t, 4 * m + 2)) / (1 - t * t));
}

namespace {

constexpr double kRescale = 1e150;

}  // namespace

std::vector<cplx> forward_recurrence(double lambda, cplx c0, int i2, int j2, int m_max, const QParam& qp) {
  Tridiagonal td = bbstar_tridiagonal(i2, j2, m_max + 1, qp);
  std::vector<cplx> c(m_max + 1);
  c[0] = c0;
  for (int m = 0; m < m_max; ++m) {
    if (td.super[m] == 0.0) throw std::domain_error("gamma_- division by zero");
    cplx prev = m > 0 ? td.sub[m - 1] * c[m - 1] : 0.0;
    c[m + 1] = ((lambda - td.main[m]) * c[m] - prev) / td.super[m];
    if (std::abs(c[m + 1]) > kRescale)
      for (int s = 0; s <= m + 1; ++s) c[s] /= kRescale;
  }
  return c;
}

double closed_form_residual(int m_top, const QParam& qp) {
  double worst = 0.0;
  for (int m = 0; m <= m_top; ++m) {
    const double c = closed_form_c(m, qp);
    double lhs = upsilon(0, m, qp) * c + upsilon(-1, m + 1, qp) * closed_form_c(m + 1, qp);
    if (m > 0) lhs += upsilon(1, m - 1, qp) * closed_form_c(m - 1, qp);
    worst = std::max(worst, std::abs(lhs - c) / std::abs(c));
  }
  return worst;
}

double closed_form_overlap(int m_max, const QParam& qp) {
  BlockEigen top = block_eigenpair(0, 0, m_max, 1.0, qp);
  cplx ov = 0.0;
  double nv = 0.0, nc = 0.0;
  for (std::size_t m = 0; m < top.vector.size(); ++m) {
    const double c = closed_form_c(int(m), qp);
    ov += std::conj(top.vector[m]) * c;
    nv += std::norm(top.vector[m]);
    nc += c * c;
  }
  return std::abs(ov) / std::sqrt(nv * nc);
}

RecurrenceResult solve_recurrence(double lambda, int i2, int j2, int m_max, const QParam& qp, double tol) {
  if (m_max < 8) throw std::invalid_argument("m_max must be >= 8");
  RecurrenceResult res;
  res.forward = forward_recurrence(lambda, 1.0, i2, j2, m_max, qp);
  {
    int from = m_max - m_max / 4;
    double s = 0.0;
    int cnt = 0;
    for (int m = from; m < m_max; ++m) {
      if (res.forward[m] == 0.0) continue;
      s += std::abs(res.forward[m + 1] / res.forward[m]);
      ++cnt;
    }
    res.tail_ratio = cnt ? s / cnt : 0.0;
  }

  // Minimal solution by backward recurrence from well past m_max.
  const int N = m_max + 40;
  Tridiagonal td = bbstar_tridiagonal(i2, j2, N + 1, qp);
  std::vector<cplx> c(N + 2, 0.0);
  c[N] = 1.0;
  for (int m = N; m >= 1; --m) {
    c[m - 1] = ((lambda - td.main[m]) * c[m] - td.super[m] * c[m + 1]) / td.sub[m - 1];
    if (std::abs(c[m - 1]) > kRescale)
      for (int s = m - 1; s <= N; ++s) c[s] /= kRescale;
  }
  const cplx c0 = c[0];
  for (auto& x : c) x /= c0;
  res.boundary_residual = std::abs((lambda - td.main[0]) - td.super[0] * c[1]) / std::max(1.0, std::abs(lambda));
  res.summable = res.boundary_residual < tol;
  if (res.summable) {
    c.resize(m_max + 1);
    double nrm = 0.0;
    for (const auto& x : c) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    for (auto& x : c) x /= nrm;
    res.c = std::move(c);
  }
  return res;
}

BlockEigen block_eigenpair(int i2, int j2, int m_max, double target, const QParam& qp) {
  Tridiagonal td = bbstar_tridiagonal(i2, j2, m_max, qp);
  GaugedTridiag g = gauge_hermitian(td.main, td.sub);
  std::vector<double> ev = g.real_form.eigenvalues();
  std::size_t best = 0;
  for (std::size_t s = 0; s < ev.size(); ++s)
    if (std::abs(ev[s] - target) < std::abs(ev[best] - target)) best = s;
  BlockEigen out;
  out.value = ev[best];
  std::vector<double> v = g.real_form.eigenvector(out.value);
  out.residual = g.real_form.residual(out.value, v);
  // fix the phase so that c_0 > 0
  double s0 = v[0] < 0 ? -1.0 : 1.0;
  for (std::size_t m = 0; m < v.size(); ++m) out.vector.push_back(s0 * v[m] * g.gauge[m]);
  return out;
}

std::vector<double> block_spectrum(int i2, int j2, int m_max, const QParam& qp) {
  Tridiagonal td = bbstar_tridiagonal(i2, j2, m_max, qp);
  return gauge_hermitian(td.main, td.sub).real_form.eigenvalues();
}

bool OmegaSet::contains(int n) const { return std::find(levels.begin(), levels.end(), n) != levels.end(); }

OmegaSet omega_detect(int n_max, int m_max, const QParam& qp, double tol) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  Tridiagonal td = bbstar_tridiagonal(0, 0, m_max, qp);
  GaugedTridiag g = gauge_hermitian(td.main, td.sub);
  OmegaSet om;
  std::vector<double> ev = g.real_form.eigenvalues();
  std::reverse(ev.begin(), ev.end());
  om.eigenvalues = ev;
  const double t2 = qp.abs_q * qp.abs_q;
  for (double lam : ev) {
    double dist = std::abs(lam);
    for (int n = 0; std::pow(t2, n) > 1e-300; ++n) dist = std::min(dist, std::abs(lam - std::pow(t2, n)));
    om.spectrum_distance = std::max(om.spectrum_distance, dist);
    bool matched = false;
    for (int n = 0; n <= n_max; ++n) {
      double level = std::pow(t2, n);
      if (std::abs(lam - level) / level >= tol) continue;
      auto v = g.real_form.eigenvector(lam);
      if (g.real_form.residual(lam, v) < 1e-8 && !om.contains(n)) {
        om.levels.push_back(n);
        matched = true;
      }
      break;
    }
    if (!matched) om.unmatched.push_back(lam);
  }
  std::sort(om.levels.begin(), om.levels.end());
  return om;
}

double FixedVector::tail_weight() const {
  double s = 0.0;
  for (std::size_t m = 1; m < c.size(); ++m) s += std::norm(c[m]);
  return s;
}

E1Basis::E1Basis(QParam qp, int m_max, int n_max_detect)
    : qp_(qp), m_max_(m_max), omega_(omega_detect(n_max_detect, m_max, qp)) {}

const PWVec& E1Basis::seed(int n_r) {
  if (auto it = seeds_.find(n_r); it != seeds_.end()) return it->second;
  if (!omega_.contains(n_r)) throw LevelNotDetected("level " + std::to_string(n_r) + " not detected");
  // raising by a* keeps enough of the tail when the block is solved n_r deeper
  const int depth = m_max_ + n_r;
  BlockEigen be = block_eigenpair(0, 0, depth, std::pow(qp_.abs_q, 2 * n_r), qp_);
  PWVec v;
  for (int m = 0; m <= depth; ++m) v[{2 * m, 0, 0, m}] = be.vector[m];
  for (int s = 0; s < n_r; ++s) v = apply(Gen::a_star, v, qp_);
  const double nrm = l2_norm(v);
  for (auto& [i, c] : v) c /= nrm;
  return seeds_.emplace(n_r, std::move(v)).first->second;
}

FixedVector E1Basis::vector(int i2, int j2, int k) {
  if ((i2 + j2) % 2 != 0) throw std::out_of_range("i + j must be an integer");
  const int n_r = (i2 + j2) / 2;
  const PWVec& s = seed(n_r);
  std::vector<Gen> word;
  auto repeat = [&word](Gen g, int e) {
    for (int x = 0; x < e; ++x) word.push_back(g);
  };
  int dpow;
  if (i2 >= n_r) {
    repeat(Gen::b_star, i2 - n_r);
    dpow = n_r - i2 + k;
  } else {
    repeat(Gen::b, n_r - i2);
    dpow = k;
  }
  repeat(dpow >= 0 ? Gen::D_star : Gen::D, std::abs(dpow));
  FixedVector fv;
  fv.i2 = i2;
  fv.j2 = j2;
  fv.k = k;
  fv.vec = apply_word(word, s, qp_);
  const double nrm = l2_norm(fv.vec);
  for (auto& [i, c] : fv.vec) c /= nrm;

  const int w2 = std::max(std::abs(i2), std::abs(j2));
  double out = 0.0;
  std::map<int, cplx> cm;
  for (const auto& [x, c] : fv.vec) {
    int m2 = x.l2 - w2;
    bool in = x.i2 == i2 && x.j2 == j2 && m2 >= 0 && m2 % 2 == 0 && x.k == n_r + k + m2 / 2;
    if (in)
      cm[m2 / 2] = c;
    else
      out += std::norm(c);
  }
  fv.leakage = std::sqrt(out);
  int top = cm.empty() ? 0 : cm.rbegin()->first;
  fv.c.assign(top + 1, 0.0);
  for (const auto& [m, c] : cm) fv.c[m] = c;

  PWVec r = apply_word({Gen::b, Gen::b_star}, fv.vec, qp_);
  axpy(r, -1.0, fv.vec);
  fv.bbstar_residual = l2_norm(r);
  return fv;
}

FixedVector e1_vector(int i2, int j2, int k, int m_max, const QParam& qp) {
  E1Basis basis(qp, m_max, std::max(12, (i2 + j2) / 2 + 1));
  return basis.vector(i2, j2, k);
}

double E1ActionReport::max() const {
  return std::max({b_residual, b_star_residual, D_residual, 1.0 - min_overlap, norm_error, gram_error,
                   bbstar_residual, leakage, k_independence});
}

E1ActionReport verify_e1_actions(int n_r, int i_radius, int k_radius, int m_max, const QParam& qp) {
  E1Basis basis(qp, m_max, std::max(12, n_r + 1));
  E1ActionReport rep;
  std::map<std::pair<int, int>, FixedVector> vecs;
  auto get = [&](int i2, int k) -> const FixedVector& {
    auto key = std::make_pair(i2, k);
    auto it = vecs.find(key);
    if (it == vecs.end()) it = vecs.emplace(key, basis.vector(i2, 2 * n_r - i2, k)).first;
    return it->second;
  };
  const double tau = 2.0 * std::numbers::pi * qp.theta;
  auto diff_norm = [](PWVec a, const PWVec& b, cplx s) {
    axpy(a, -s, b);
    return l2_norm(a);
  };
  for (int i2 = n_r - i_radius; i2 <= n_r + i_radius; ++i2)
    for (int k = -k_radius; k <= k_radius; ++k) {
      const FixedVector& v = get(i2, k);
      ++rep.vectors;
      rep.bbstar_residual = std::max(rep.bbstar_residual, v.bbstar_residual);
      rep.leakage = std::max(rep.leakage, v.leakage);

      PWVec bv = apply(Gen::b, v.vec, qp);
      const FixedVector& tb = get(i2 - 1, i2 >= n_r + 1 ? k - 1 : k);
      rep.b_residual = std::max(rep.b_residual, diff_norm(bv, tb.vec, 1.0));
      rep.min_overlap = std::min(rep.min_overlap, std::abs(inner(tb.vec, bv)));
      rep.norm_error = std::max(rep.norm_error, std::abs(l2_norm(bv) - 1.0));

      PWVec bsv = apply(Gen::b_star, v.vec, qp);
      const FixedVector& tbs = get(i2 + 1, i2 >= n_r ? k + 1 : k);
      rep.b_star_residual = std::max(rep.b_star_residual, diff_norm(bsv, tbs.vec, 1.0));
      rep.min_overlap = std::min(rep.min_overlap, std::abs(inner(tbs.vec, bsv)));

      PWVec dv = apply(Gen::D, v.vec, qp);
      const FixedVector& td = get(i2, k - 1);
      rep.D_residual = std::max(rep.D_residual, diff_norm(dv, td.vec, std::polar(1.0, tau * (i2 - n_r))));
    }
  // Gram matrix over the label box
  std::vector<const FixedVector*> box;
  for (int i2 = n_r - i_radius; i2 <= n_r + i_radius; ++i2)
    for (int k = -k_radius; k <= k_radius; ++k) box.push_back(&get(i2, k));
  for (std::size_t a = 0; a < box.size(); ++a)
    for (std::size_t b = a; b < box.size(); ++b) {
      cplx g = inner(box[a]->vec, box[b]->vec);
      rep.gram_error = std::max(rep.gram_error, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  // C_{i,j,k} across k, and the decay bound at k = 0
  const double t = qp.abs_q;
  for (int i2 = n_r - i_radius; i2 <= n_r + i_radius; ++i2) {
    double lo = 1e300, hi = -1e300;
    for (int k = -k_radius; k <= k_radius; ++k) {
      double c = get(i2, k).tail_weight();
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    rep.k_independence = std::max(rep.k_independence, hi - lo);
    if (i2 < n_r) {
      const FixedVector& v = get(i2, 0);
      for (std::size_t m = 0; m < v.c.size(); ++m) {
        double bound = std::pow(t, double(m) * (n_r - i2)) / ((1 - t) * (1 - t));
        rep.decay_violation = std::max(rep.decay_violation, std::abs(v.c[m]) - bound);
      }
    }
  }
  return rep;
}

}  // namespace uq2
