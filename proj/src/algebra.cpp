#include "uq2/algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace uq2 {

int Monomial::degree() const { return std::abs(n) + m + r + std::abs(k); }

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::a: return "a";
    case Gen::a_star: return "a*";
    case Gen::b: return "b";
    case Gen::b_star: return "b*";
    case Gen::D: return "D";
    case Gen::D_star: return "D*";
  }
  return "?";
}

Gen gen_from_name(const std::string& s) {
  for (Gen g : all_gens)
    if (s == gen_name(g)) return g;
  throw std::invalid_argument("unknown generator " + s);
}

AlgebraElement AlgebraElement::unit(cplx c) { return mono({}, c); }

AlgebraElement AlgebraElement::mono(Monomial x, cplx c) {
  AlgebraElement e;
  e.terms[x] = c;
  return e;
}

AlgebraElement AlgebraElement::gen(Gen g) {
  switch (g) {
    case Gen::a: return mono({1, 0, 0, 0});
    case Gen::a_star: return mono({-1, 0, 0, 0});
    case Gen::b: return mono({0, 1, 0, 0});
    case Gen::b_star: return mono({0, 0, 1, 0});
    case Gen::D: return mono({0, 0, 0, 1});
    case Gen::D_star: return mono({0, 0, 0, -1});
  }
  return {};
}

AlgebraElement& AlgebraElement::add(const AlgebraElement& y, cplx s) {
  for (const auto& [x, c] : y.terms) terms[x] += s * c;
  return *this;
}

AlgebraElement AlgebraElement::scaled(cplx s) const {
  AlgebraElement e = *this;
  for (auto& [x, c] : e.terms) c *= s;
  return e;
}

AlgebraElement& AlgebraElement::prune(double thresh) {
  std::erase_if(terms, [thresh](const auto& kv) { return std::abs(kv.second) <= thresh; });
  return *this;
}

double AlgebraElement::max_abs() const {
  double m = 0.0;
  for (const auto& [x, c] : terms) m = std::max(m, std::abs(c));
  return m;
}

bool AlgebraElement::is_scalar() const {
  for (const auto& [x, c] : terms)
    if (x != Monomial{} && c != 0.0) return false;
  return true;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r = x;
  return r.add(y);
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r = x;
  return r.add(y, -1.0);
}

void check_pw_label(int l2, int i2, int j2) {
  if (l2 < 0 || std::abs(i2) > l2 || std::abs(j2) > l2 || (l2 - i2) % 2 != 0 || (l2 - j2) % 2 != 0)
    throw std::out_of_range("invalid Peter-Weyl label");
}

Algebra::Algebra(QParam qp, double prune) : qp_(qp), prune_(prune) {}

// a_n a_s = sum_j c_j a_{n'} (bb*)^j with the (bb*)^j to the right.
const std::vector<Algebra::AaTerm>& Algebra::aa(int n, int s) const {
  auto key = std::make_pair(n, s);
  if (auto it = aa_cache_.find(key); it != aa_cache_.end()) return it->second;
  std::vector<AaTerm> out;
  if ((n >= 0 && s >= 0) || (n <= 0 && s <= 0)) {
    out.push_back({n + s, 0, 1.0});
  } else {
    const std::vector<AaTerm>* prev;
    double c;
    if (n > 0) {
      // a a* = 1 - bb*, then bb* moves right through (a*)^{t-1}
      int t = -s;
      prev = &aa(n - 1, s + 1);
      c = qp_.tpow(-2 * (t - 1));
    } else {
      // a* a = 1 - |q|^2 b*b, then bb* moves right through a^{s-1}
      prev = &aa(n + 1, s - 1);
      c = qp_.tpow(2 * s);
    }
    std::map<std::pair<int, int>, double> acc;
    for (const auto& t : *prev) {
      acc[{t.n, t.j}] += t.c;
      acc[{t.n, t.j + 1}] -= c * t.c;
    }
    for (const auto& [nj, v] : acc) out.push_back({nj.first, nj.second, v});
  }
  return aa_cache_.emplace(key, std::move(out)).first->second;
}

AlgebraElement Algebra::mul_mono(const Monomial& x, const Monomial& y) const {
  const cplx rot = qp_.phase(2);  // q / qbar
  cplx coef = std::pow(std::conj(rot), x.k * y.m) * std::pow(rot, x.k * y.r);
  coef *= qp_.qpow(x.m * y.n) * qp_.qbarpow(x.r * y.n);
  AlgebraElement out;
  for (const auto& t : aa(x.n, y.n)) {
    Monomial z{t.n, x.m + y.m + t.j, x.r + y.r + t.j, x.k + y.k};
    out.terms[z] += coef * t.c;
  }
  return out;
}

AlgebraElement Algebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms)
      for (const auto& [mz, cz] : mul_mono(mx, my).terms) out.terms[mz] += cx * cy * cz;
  return out.prune(prune_);
}

AlgebraElement Algebra::power(const AlgebraElement& x, int e) const {
  AlgebraElement r = AlgebraElement::unit();
  for (int s = 0; s < e; ++s) r = mul(r, x);
  return r;
}

AlgebraElement Algebra::adjoint(const AlgebraElement& x) const {
  using E = AlgebraElement;
  E out;
  for (const auto& [mx, c] : x.terms) {
    // (a_n b^m b*^r D^k)* = D^{-k} b^r b*^m a_{-n}
    AlgebraElement t = mul(mul_mono({0, 0, 0, -mx.k}, {0, mx.r, mx.m, 0}), E::mono({-mx.n, 0, 0, 0}));
    out.add(t, std::conj(c));
  }
  return out.prune(prune_);
}

const AlgebraElement& Algebra::t_coef(int l2, int i2, int j2) const {
  auto key = std::make_tuple(l2, i2, j2);
  if (auto it = t_cache_.find(key); it != t_cache_.end()) return it->second;
  const double t = qp_.abs_q * qp_.abs_q;
  const int lmi = (l2 - i2) / 2, lmj = (l2 - j2) / 2, lpj = (l2 + j2) / 2, lpi = (l2 + i2) / 2;
  const double pref = std::sqrt(q_binomial(l2, lpj, t) / q_binomial(l2, lpi, t));
  const AlgebraElement a = AlgebraElement::gen(Gen::a);
  const AlgebraElement b = AlgebraElement::gen(Gen::b);
  const AlgebraElement c = mul(AlgebraElement::gen(Gen::D), AlgebraElement::gen(Gen::b_star)).scaled(-qp_.qbar);
  const AlgebraElement d = AlgebraElement::mono({-1, 0, 0, 1});            // D a*
  AlgebraElement res;
  for (int m = 0; m <= lmj; ++m) {
    int n = lmi - m;
    if (n < 0 || n > lpj) continue;
    cplx cf = qp_.qpow(n * (lmj - m)) * pref * q_binomial(lmj, m, t) * q_binomial(lpj, n, t);
    AlgebraElement term = mul(mul(mul(power(a, m), power(c, lmj - m)), power(b, n)), power(d, lpj - n));
    res.add(term, cf);
  }
  res.prune(prune_);
  return t_cache_.emplace(key, std::move(res)).first->second;
}

AlgebraElement Algebra::matrix_coefficient(int l2, int i2, int j2, int k) const {
  check_pw_label(l2, i2, j2);
  AlgebraElement out;
  for (const auto& [x, c] : t_coef(l2, i2, j2).terms) out.terms[{x.n, x.m, x.r, x.k - k}] = c;
  return out;
}

AlgebraElement Algebra::basis_vector(int l2, int i2, int j2, int k) const {
  double norm = std::pow(qp_.abs_q, -0.5 * i2) * std::sqrt(q_integer(l2 + 1, qp_.abs_q));
  return matrix_coefficient(l2, i2, j2, k).scaled(norm);
}

AlgebraElement Algebra::jacobi_form(int l2, int i2, int j2) const {
  check_pw_label(l2, i2, j2);
  const double t = qp_.abs_q * qp_.abs_q;
  const int s = (i2 + j2) / 2, dd = (i2 - j2) / 2;
  const int lpj = (l2 + j2) / 2, lmj = (l2 - j2) / 2, lpi = (l2 + i2) / 2, lmi = (l2 - i2) / 2;
  const double pref = std::sqrt(q_binomial(l2, lpj, t) / q_binomial(l2, lpi, t));
  const AlgebraElement a = AlgebraElement::gen(Gen::a);
  const AlgebraElement as = AlgebraElement::gen(Gen::a_star);
  const AlgebraElement b = AlgebraElement::gen(Gen::b);
  const AlgebraElement c = mul(AlgebraElement::gen(Gen::D), AlgebraElement::gen(Gen::b_star)).scaled(-qp_.qbar);
  const AlgebraElement D = AlgebraElement::gen(Gen::D);

  auto poly = [&](int n, int al, int be) {
    AlgebraElement p;
    auto cs = little_q_jacobi_coeffs(n, al, be, t);
    for (int e = 0; e <= n; ++e) p.terms[{0, e, e, 0}] = cs[e];
    return p;
  };

  AlgebraElement r;
  cplx cf;
  if (s <= 0 && dd >= 0) {
    cf = qp_.qbarpow(-dd * lpj) * pref * q_binomial(lmj, dd, t);
    r = mul(mul(mul(power(a, -s), power(c, dd)), poly(lpj, dd, -s)), power(D, lpj));
  } else if (s <= 0) {
    cf = qp_.qpow(dd * lpi) * pref * q_binomial(lpj, -dd, t);
    r = mul(mul(mul(power(a, -s), power(b, -dd)), poly(lpi, -dd, -s)), power(D, lpi));
  } else if (dd <= 0) {
    cf = qp_.qpow(dd * lpi) * pref * q_binomial(lpj, -dd, t);
    r = mul(mul(mul(poly(lmj, -dd, s), power(as, s)), power(b, -dd)), power(D, lpi));
  } else {
    cf = qp_.qbarpow(-dd * lpj) * pref * q_binomial(lmj, dd, t);
    r = mul(mul(mul(poly(lmi, dd, s), power(as, s)), power(c, dd)), power(D, lpj));
  }
  return r.scaled(cf).prune(prune_);
}

}  // namespace uq2

#include "uq2/pw.hpp"

namespace uq2 {

double Algebra::verify_action(int l2, int i2, int j2, int k, Gen g) const {
  AlgebraElement diff = mul(AlgebraElement::gen(g), basis_vector(l2, i2, j2, k));
  for (const Shift& s : action_coefficients(g, l2, i2, j2, qp_))
    diff.add(basis_vector(l2 + s.dl2, i2 + s.di2, j2 + s.dj2, k + s.dk), -s.c);
  return diff.max_abs();
}

}  // namespace uq2
