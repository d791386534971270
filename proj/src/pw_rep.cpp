#include "uq2/pw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace uq2 {

namespace {

// 1 - |q|^e, with the structural zero at e = 0 kept exact.
struct Factors {
  double t;
  double F(int e) const { return e == 0 ? 0.0 : 1.0 - std::pow(t, e); }
  // sqrt(F(n1) F(n2) / (F(d1) F(d2))), exactly 0 when a numerator factor vanishes
  double root(int n1, int n2, int d1, int d2) const {
    if (n1 == 0 || n2 == 0) return 0.0;
    return std::sqrt(F(n1) * F(n2) / (F(d1) * F(d2)));
  }
};

void push(std::vector<Shift>& out, int l2, int i2, int j2, Shift s) {
  if (s.c == 0.0) return;
  PWIndex t{l2 + s.dl2, i2 + s.di2, j2 + s.dj2, 0};
  if (!t.valid()) return;
  out.push_back(s);
}

}  // namespace

bool PWIndex::valid() const {
  return l2 >= 0 && std::abs(i2) <= l2 && std::abs(j2) <= l2 && (l2 - i2) % 2 == 0 && (l2 - j2) % 2 == 0;
}

std::vector<Shift> action_coefficients(Gen g, int l2, int i2, int j2, const QParam& qp, Coefficients variant) {
  check_pw_label(l2, i2, j2);
  const Factors f{qp.abs_q};
  const cplx s = qp.half_phase;
  const int lmj = (l2 - j2) / 2, lmi = (l2 - i2) / 2;
  const int di = (i2 - j2) / 2;  // i - j
  const bool low = l2 > 0;
  std::vector<Shift> out;
  switch (g) {
    case Gen::D:
      out.push_back({0, 0, 0, -1, qp.phase(2 * di)});
      break;
    case Gen::D_star:
      out.push_back({0, 0, 0, 1, qp.phase(-2 * di)});
      break;
    case Gen::b: {
      cplx bp = qp.qpow(lmj) * f.root(l2 + j2 + 2, l2 - i2 + 2, 2 * l2 + 2, 2 * l2 + 4);
      push(out, l2, i2, j2, {1, -1, 1, 0, bp});
      if (low) {
        cplx bm = -qp.qpow(lmj - 1) * qp.qbarpow(-di + 1) * s * f.root(l2 - j2, l2 + i2, 2 * l2, 2 * l2 + 2);
        push(out, l2, i2, j2, {-1, -1, 1, -1, bm});
      }
      break;
    }
    case Gen::b_star: {
      cplx bpp = -qp.qpow(-di - 1) * qp.qbarpow(lmj + 1) * s * f.root(l2 - j2 + 2, l2 + i2 + 2, 2 * l2 + 2, 2 * l2 + 4);
      push(out, l2, i2, j2, {1, 1, -1, 1, bpp});
      if (low) {
        cplx bmp = qp.qbarpow(lmj) * f.root(l2 + j2, l2 - i2, 2 * l2, 2 * l2 + 2);
        push(out, l2, i2, j2, {-1, 1, -1, 0, bmp});
      }
      break;
    }
    case Gen::a: {
      double ap = f.root(l2 - j2 + 2, l2 - i2 + 2, 2 * l2 + 2, 2 * l2 + 4);
      push(out, l2, i2, j2, {1, -1, -1, 0, ap});
      if (low) {
        cplx ph = qp.qpow(lmi) * qp.qbarpow(lmj + 1) * s;
        if (variant == Coefficients::corrected) ph = std::conj(ph);
        push(out, l2, i2, j2, {-1, -1, -1, -1, ph * f.root(l2 + j2, l2 + i2, 2 * l2, 2 * l2 + 2)});
      }
      break;
    }
    case Gen::a_star: {
      cplx ph = qp.qpow(lmj) * qp.qbarpow(lmi + 1) * s;
      if (variant == Coefficients::corrected) ph = std::conj(ph);
      push(out, l2, i2, j2, {1, 1, 1, 1, ph * f.root(l2 + j2 + 2, l2 + i2 + 2, 2 * l2 + 2, 2 * l2 + 4)});
      if (low) {
        double amp = f.root(l2 - j2, l2 - i2, 2 * l2, 2 * l2 + 2);
        push(out, l2, i2, j2, {-1, 1, 1, 0, amp});
      }
      break;
    }
  }
  return out;
}

bool TruncationWindow::contains(const PWIndex& x) const {
  return x.valid() && x.l2 <= l2_max && x.k >= k_min && x.k <= k_max;
}

bool TruncationWindow::interior(const PWIndex& x, int depth) const {
  return contains(x) && x.l2 + depth <= l2_max && x.k - depth >= k_min && x.k + depth <= k_max;
}

std::vector<PWIndex> TruncationWindow::indices() const {
  std::vector<PWIndex> out;
  for (int l2 = 0; l2 <= l2_max; ++l2)
    for (int i2 = -l2; i2 <= l2; i2 += 2)
      for (int j2 = -l2; j2 <= l2; j2 += 2)
        for (int k = k_min; k <= k_max; ++k) out.push_back({l2, i2, j2, k});
  return out;
}

PWOp build_operator(Gen g, const TruncationWindow& w, const QParam& qp) {
  PWOp op;
  for (const PWIndex& x : w.indices()) {
    auto& col = op.cols[x];
    for (const Shift& s : action_coefficients(g, x.l2, x.i2, x.j2, qp)) {
      PWIndex y{x.l2 + s.dl2, x.i2 + s.di2, x.j2 + s.dj2, x.k + s.dk};
      if (w.contains(y)) col.emplace_back(y, s.c);
    }
  }
  return op;
}

PWVec apply(Gen g, const PWVec& v, const QParam& qp, Coefficients variant) {
  PWVec out;
  for (const auto& [x, c] : v)
    for (const Shift& s : action_coefficients(g, x.l2, x.i2, x.j2, qp, variant))
      out[{x.l2 + s.dl2, x.i2 + s.di2, x.j2 + s.dj2, x.k + s.dk}] += c * s.c;
  return out;
}

PWVec apply_word(const std::vector<Gen>& word, const PWVec& v, const QParam& qp, Coefficients variant) {
  PWVec r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply(*it, r, qp, variant);
  return r;
}

PWVec apply_element(const AlgebraElement& x, const PWVec& v, const QParam& qp) {
  PWVec out;
  for (const auto& [m, c] : x.terms) {
    std::vector<Gen> word;
    for (int s = 0; s < std::abs(m.n); ++s) word.push_back(m.n > 0 ? Gen::a : Gen::a_star);
    for (int s = 0; s < m.m; ++s) word.push_back(Gen::b);
    for (int s = 0; s < m.r; ++s) word.push_back(Gen::b_star);
    for (int s = 0; s < std::abs(m.k); ++s) word.push_back(m.k > 0 ? Gen::D : Gen::D_star);
    axpy(out, c, apply_word(word, v, qp));
  }
  return out;
}

double RelationReport::max() const {
  double m = 0.0;
  for (const auto& r : residuals) m = std::max(m, r.value);
  return m;
}

RelationReport verify_relations_pw(const TruncationWindow& w, const QParam& qp, Coefficients variant) {
  std::map<Gen, PWOp> ops;
  for (Gen g : all_gens) {
    PWOp op;
    for (const PWIndex& x : w.indices()) {
      auto& col = op.cols[x];
      for (const Shift& s : action_coefficients(g, x.l2, x.i2, x.j2, qp, variant)) {
        PWIndex y{x.l2 + s.dl2, x.i2 + s.di2, x.j2 + s.dj2, x.k + s.dk};
        if (w.contains(y)) col.emplace_back(y, s.c);
      }
    }
    ops.emplace(g, std::move(op));
  }
  auto word = [&](Gen g, Gen h, const PWVec& v) { return ops.at(g).apply(ops.at(h).apply(v)); };
  const cplx q = qp.q;
  const double t2 = qp.abs_q * qp.abs_q;
  const cplx rot = q * q / t2;

  RelationReport rep;
  rep.residuals = {{"ba=qab", 0},    {"a*b=qba*", 0},          {"bb*=b*b", 0}, {"aa*+bb*=1", 0},
                   {"a*a+|q|^2b*b=1", 0}, {"aD=Da", 0}, {"bD=q^2|q|^-2Db", 0}, {"DD*=D*D=1", 0}};
  using G = Gen;
  for (const PWIndex& x : w.indices()) {
    if (!w.interior(x, 2)) continue;
    ++rep.vectors;
    PWVec e{{x, 1.0}};
    PWVec r[8];
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
    PWVec r8 = word(G::D_star, G::D, e);
    axpy(r8, -1.0, e);
    for (int s = 0; s < 8; ++s) rep.residuals[s].value = std::max(rep.residuals[s].value, l2_norm(r[s]));
    rep.residuals[7].value = std::max(rep.residuals[7].value, l2_norm(r8));
  }
  return rep;
}

Gammas bbstar_gammas(int l2, int i2, int j2, const QParam& qp) {
  check_pw_label(l2, i2, j2);
  const Factors f{qp.abs_q};
  const double t = qp.abs_q;
  const cplx s = qp.half_phase;
  const int lmi = (l2 - i2) / 2, lmj = (l2 - j2) / 2;
  Gammas g{};
  {
    int n[4] = {l2 + 2 + j2, l2 + 2 - j2, l2 + 2 + i2, l2 + 2 - i2};
    double num = f.F(n[0]) * f.F(n[1]) * f.F(n[2]) * f.F(n[3]);
    g.plus = -qp.qpow(lmi) * qp.qbarpow(lmj + 1) * s / f.F(2 * l2 + 4) *
             std::sqrt(num / (f.F(2 * l2 + 2) * f.F(2 * l2 + 6)));
  }
  g.mid = std::pow(t, l2 - i2) * f.F(l2 - j2 + 2) * f.F(l2 + i2 + 2) / (f.F(2 * l2 + 2) * f.F(2 * l2 + 4));
  if (l2 > 0 && l2 + j2 != 0 && l2 - i2 != 0)
    g.mid += std::pow(t, l2 - j2) * f.F(l2 + j2) * f.F(l2 - i2) / (f.F(2 * l2) * f.F(2 * l2 + 2));
  const bool vanish = l2 + j2 == 0 || l2 - j2 == 0 || l2 + i2 == 0 || l2 - i2 == 0;
  if (!vanish) {
    double num = f.F(l2 + j2) * f.F(l2 - j2) * f.F(l2 + i2) * f.F(l2 - i2);
    g.minus = -qp.qpow(lmj - 1) * qp.qbarpow(lmi) * s / f.F(2 * l2) *
              std::sqrt(num / (f.F(2 * l2 - 2) * f.F(2 * l2 + 2)));
  }
  return g;
}

Tridiagonal bbstar_tridiagonal(int i2, int j2, int m_max, const QParam& qp) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  if ((i2 - j2) % 2 != 0) throw std::out_of_range("i, j must have equal parity");
  const int w2 = std::max(std::abs(i2), std::abs(j2));
  Tridiagonal td;
  for (int m = 0; m <= m_max; ++m) {
    Gammas g = bbstar_gammas(w2 + 2 * m, i2, j2, qp);
    td.main.push_back(g.mid);
    if (m == 0) td.boundary_minus = g.minus;
    if (m < m_max) td.sub.push_back(g.plus);
    if (m > 0) td.super.push_back(g.minus);
  }
  return td;
}

}  // namespace uq2
