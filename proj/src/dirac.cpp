#include "uq2/dirac.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

namespace uq2 {

cplx dirac_eigenvalue(int l2, int i2, int k) {
  if (l2 < 0 || std::abs(i2) > l2 || (l2 - i2) % 2 != 0) throw std::out_of_range("invalid Dirac label");
  if (i2 == -l2) return {-(l2 + 1.0), static_cast<double>(k)};
  return {l2 + 1.0, k - (l2 + i2) / 2.0};
}

std::int64_t dirac_modulus_sq(int l2, int i2, int k) {
  std::int64_t re = l2 + 1;
  std::int64_t im = k - (l2 + i2) / 2;
  return re * re + im * im;
}

double commutator_norm(Gen g, const TruncationWindow& w, const QParam& qp, bool adjoint_T) {
  double best = 0.0;
  for (const PWIndex& x : w.indices()) {
    if (!w.interior(x)) continue;
    cplx dx = dirac_eigenvalue(x.l2, x.i2, x.k);
    double s = 0.0;
    for (const Shift& sh : action_coefficients(g, x.l2, x.i2, x.j2, qp)) {
      cplx dy = dirac_eigenvalue(x.l2 + sh.dl2, x.i2 + sh.di2, x.k + sh.dk);
      cplx diff = adjoint_T ? std::conj(dy) - std::conj(dx) : dy - dx;
      s += std::norm(sh.c * diff);
    }
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

PWVec dirac_commutator(const AlgebraElement& x, const PWVec& v, const QParam& qp) {
  PWVec tv;
  for (const auto& [i, c] : v) tv[i] = dirac_eigenvalue(i.l2, i.i2, i.k) * c;
  PWVec out = apply_element(x, v, qp);
  for (auto& [i, c] : out) c *= dirac_eigenvalue(i.l2, i.i2, i.k);
  axpy(out, -1.0, apply_element(x, tv, qp));
  return out;
}

namespace {

// #{x in Z : x^2 <= r}
std::int64_t lattice_count(double r) {
  if (r < 0) return 0;
  auto x = static_cast<std::int64_t>(std::floor(std::sqrt(r)));
  while (static_cast<double>((x + 1) * (x + 1)) <= r) ++x;
  while (x > 0 && static_cast<double>(x * x) > r) --x;
  return 2 * x + 1;
}

}  // namespace

std::int64_t eigenvalue_count(double lambda) {
  const double L2 = lambda * lambda;
  std::int64_t total = 0;
  for (int l2 = 0; l2 + 1 <= lambda; ++l2) {
    double r = L2 - double(l2 + 1) * double(l2 + 1);
    // for every i the k-range is a full lattice interval, so the count does not depend on i
    total += std::int64_t(l2 + 1) * std::int64_t(l2 + 1) * lattice_count(r);
  }
  return total;
}

std::int64_t eigenvalue_count_k0(double lambda) {
  const double L2 = lambda * lambda;
  std::int64_t total = 0;
  for (int l2 = 0; l2 + 1 <= lambda; ++l2)
    for (int i2 = -l2; i2 <= l2; i2 += 2)
      if (double(dirac_modulus_sq(l2, i2, 0)) <= L2) total += l2 + 1;
  return total;
}

std::int64_t count_upper_bound(int n) {
  std::int64_t s = 0;
  for (std::int64_t m = 0; m <= n; ++m) s += (2 * m + 1) * (2 * m + 1);
  return 4 * std::int64_t(n) * s;
}

std::int64_t count_lower_bound(int n) {
  std::int64_t f = n / 4, s = 0;
  for (std::int64_t m = 1; m <= f; ++m) s += m * m;
  return (f + 1) * s;
}

double count_slope(double lo, double hi, bool k0_plane, int samples) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int s = 0; s < samples; ++s) {
    double lam = lo + (hi - lo) * s / (samples - 1);
    double c = double(k0_plane ? eigenvalue_count_k0(lam) : eigenvalue_count(lam));
    double x = std::log(lam), y = std::log(c);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (samples * sxy - sx * sy) / (samples * sxx - sx * sx);
}

double summability_slope(double lambda_max) { return count_slope(lambda_max / 2, lambda_max); }

EquivarianceResult check_equivariance(const TruncationWindow& w, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  EquivarianceResult res;
  res.trials = trials;
  res.negative_control = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    int l2 = std::uniform_int_distribution<int>(0, w.l2_max)(rng);
    int i2 = -l2 + 2 * std::uniform_int_distribution<int>(0, l2)(rng);
    int k = std::uniform_int_distribution<int>(w.k_min, w.k_max)(rng);
    const int dim = l2 + 1;
    std::vector<cplx> U(dim * dim);
    for (auto& u : U) u = {normal(rng), normal(rng)};
    for (int a = 0; a < dim; ++a) {
      PWVec e{{{l2, i2, -l2 + 2 * a, k}, 1.0}};
      // T U e and U T e, both formed explicitly
      PWVec Ue, TUe, UTe;
      for (int b = 0; b < dim; ++b) Ue[{l2, i2, -l2 + 2 * b, k}] = U[b * dim + a];
      for (const auto& [y, c] : Ue) TUe[y] = dirac_eigenvalue(y.l2, y.i2, y.k) * c;
      cplx dx = dirac_eigenvalue(l2, i2, k);
      for (const auto& [y, c] : Ue) UTe[y] = c * dx;
      axpy(TUe, -1.0, UTe);
      res.residual = std::max(res.residual, sup_norm(TUe));
    }
    // l-shift e^l_{i,j,k} -> e^{l+1}_{i,j,k}
    double ctl = 0.0;
    for (int a = 0; a < dim; ++a) {
      cplx d0 = dirac_eigenvalue(l2, i2, k), d1 = dirac_eigenvalue(l2 + 2, i2, k);
      ctl = std::max(ctl, std::abs(d1 - d0));
    }
    res.negative_control = std::min(res.negative_control, ctl);
  }
  return res;
}

Witness nondegeneracy_witness(const AlgebraElement& x, const QParam& qp) {
  Witness w;
  w.source = {2, 0, 0, 0};
  int eta = -1;
  for (const auto& [m, c] : x.terms) {
    if (c == 0.0) continue;
    if (m.degree() > eta) {
      eta = m.degree();
      w.leading = m;
    }
  }
  if (eta <= 0) return w;  // scalar: [T, x] = 0
  const Monomial& m = w.leading;
  w.target = {w.source.l2 + eta - std::abs(m.k), m.r - m.m - m.n, m.m - m.r - m.n,
              m.n >= 0 ? m.r - m.k : m.r - m.k - m.n};
  PWVec v = dirac_commutator(x, PWVec{{w.source, 1.0}}, qp);
  auto it = v.find(w.target);
  w.value = it == v.end() ? 0.0 : std::abs(it->second);
  return w;
}

EvenTripleReport assemble_even_triple(const TruncationWindow& w, const QParam& qp) {
  EvenTripleReport rep;
  auto T = [](const PWVec& v, bool star) {
    PWVec o;
    for (const auto& [i, c] : v) {
      cplx d = dirac_eigenvalue(i.l2, i.i2, i.k);
      o[i] = (star ? std::conj(d) : d) * c;
    }
    return o;
  };
  struct Pair {
    PWVec top, bot;
  };
  auto Dop = [&](const Pair& p) { return Pair{T(p.bot, true), T(p.top, false)}; };
  auto gam = [](Pair p) {
    for (auto& [i, c] : p.bot) c = -c;
    return p;
  };
  auto diff = [](const Pair& a, const Pair& b, cplx s) {
    PWVec t = a.top, u = a.bot;
    axpy(t, s, b.top);
    axpy(u, s, b.bot);
    return std::max(sup_norm(t), sup_norm(u));
  };
  for (Gen g : all_gens) rep.doubled_norm[g] = 0.0;
  for (const PWIndex& x : w.indices()) {
    PWVec e{{x, 1.0}};
    for (const Pair& p : {Pair{e, {}}, Pair{{}, e}}) {
      rep.anticommutator = std::max(rep.anticommutator, diff(Dop(gam(p)), gam(Dop(p)), 1.0));
      Pair sq = Dop(Dop(p));
      Pair ref = p;
      double d2 = double(dirac_modulus_sq(x.l2, x.i2, x.k));
      for (auto& [i, c] : ref.top) c *= d2;
      for (auto& [i, c] : ref.bot) c *= d2;
      rep.square_residual = std::max(rep.square_residual, diff(sq, ref, -1.0));
      if (!w.interior(x)) continue;
      for (Gen g : all_gens) {
        auto pi = [&](const Pair& v) { return Pair{apply(g, v.top, qp), apply(g, v.bot, qp)}; };
        rep.grading_commutator = std::max(rep.grading_commutator, diff(gam(pi(p)), pi(gam(p)), -1.0));
        Pair a = Dop(pi(p)), b = pi(Dop(p));
        PWVec t = a.top, u = a.bot;
        axpy(t, -1.0, b.top);
        axpy(u, -1.0, b.bot);
        double nrm = std::sqrt(std::pow(l2_norm(t), 2) + std::pow(l2_norm(u), 2));
        rep.doubled_norm[g] = std::max(rep.doubled_norm[g], nrm);
      }
    }
  }
  for (Gen g : all_gens)
    rep.reference[g] = std::max(commutator_norm(g, w, qp, false), commutator_norm(g, w, qp, true));
  return rep;
}

ResolventReport resolvent_decay(const TruncationWindow& w, const std::vector<double>& eps) {
  ResolventReport rep;
  std::vector<long> counts(eps.size(), 0);
  for (const PWIndex& x : w.indices()) {
    const std::int64_t d2 = dirac_modulus_sq(x.l2, x.i2, x.k);
    const std::int64_t base = std::int64_t(x.l2 + 1) * (x.l2 + 1);
    rep.base_bound_violation = std::max(rep.base_bound_violation, 1.0 / d2 - 1.0 / base);
    // tails in exact integers: 1/|d|^2 <= 1/B  <=>  |d|^2 >= B
    if (x.k >= x.l2) {
      std::int64_t B = base + std::int64_t(x.k - x.l2) * (x.k - x.l2);
      rep.upper_tail_violation = std::max(rep.upper_tail_violation, 1.0 / d2 - 1.0 / B);
      if ((d2 == B) != (x.i2 == x.l2)) rep.upper_equality_iff_i_plus_l = false;
    }
    if (x.k <= 0) {
      std::int64_t B = base + std::int64_t(x.k) * x.k;
      rep.lower_tail_violation = std::max(rep.lower_tail_violation, 1.0 / d2 - 1.0 / B);
      if ((d2 == B) != (x.i2 == -x.l2)) rep.lower_equality_iff_i_minus_l = false;
    }
    for (std::size_t s = 0; s < eps.size(); ++s)
      if (1.0 / std::sqrt(double(d2)) >= eps[s]) ++counts[s];
  }
  for (std::size_t s = 0; s < eps.size(); ++s) rep.counts.emplace_back(eps[s], counts[s]);
  return rep;
}

}  // namespace uq2
