#include "uq2/hopf.hpp"

#include <cmath>
#include <cstdlib>

namespace uq2 {

namespace {

using E = AlgebraElement;

void accumulate(Tensor2& t, const E& x, const E& y, cplx s) {
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) t[{mx, my}] += s * cx * cy;
}

double max_abs(const auto& m) {
  double r = 0.0;
  for (const auto& kv : m) r = std::max(r, std::abs(kv.second));
  return r;
}

double element_residual(const E& x, const E& y) {
  E d = x - y;
  return d.max_abs();
}

}  // namespace

std::vector<Monomial> monomials_up_to(int max_degree) {
  std::vector<Monomial> out;
  for (int n = -max_degree; n <= max_degree; ++n)
    for (int m = 0; m <= max_degree; ++m)
      for (int r = 0; r <= max_degree; ++r)
        for (int k = -max_degree; k <= max_degree; ++k) {
          Monomial x{n, m, r, k};
          if (x.degree() <= max_degree) out.push_back(x);
        }
  return out;
}

Hopf::Hopf(const Algebra& alg) : alg_(alg) {
  const QParam& qp = alg.param();
  E a = E::gen(Gen::a), as = E::gen(Gen::a_star), b = E::gen(Gen::b), bs = E::gen(Gen::b_star);
  E D = E::gen(Gen::D), Ds = E::gen(Gen::D_star);
  auto& d = gen_delta_;
  accumulate(d[0], a, a, 1.0);
  accumulate(d[0], b, alg.mul(D, bs), -qp.qbar);
  accumulate(d[1], as, as, 1.0);
  accumulate(d[1], bs, alg.mul(b, Ds), -qp.q);
  accumulate(d[2], a, b, 1.0);
  accumulate(d[2], b, alg.mul(D, as), 1.0);
  accumulate(d[3], as, bs, 1.0);
  accumulate(d[3], bs, alg.mul(a, Ds), 1.0);
  accumulate(d[4], D, D, 1.0);
  accumulate(d[5], Ds, Ds, 1.0);

  gen_s_[0] = as;
  gen_s_[1] = a;
  gen_s_[2] = alg.mul(b, Ds).scaled(-qp.q);
  gen_s_[3] = alg.mul(bs, D).scaled(-1.0 / qp.qbar);
  gen_s_[4] = Ds;
  gen_s_[5] = D;
}

Tensor2 Hopf::tensor_mul(const Tensor2& x, const Tensor2& y) const {
  Tensor2 out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      E l = alg_.mul_mono(kx.first, ky.first);
      E r = alg_.mul_mono(kx.second, ky.second);
      accumulate(out, l, r, cx * cy);
    }
  std::erase_if(out, [&](const auto& kv) { return std::abs(kv.second) <= alg_.prune_threshold(); });
  return out;
}

Tensor2 Hopf::tensor_adjoint(const Tensor2& x) const {
  Tensor2 out;
  for (const auto& [k, c] : x) {
    E l = alg_.adjoint(E::mono(k.first));
    E r = alg_.adjoint(E::mono(k.second));
    accumulate(out, l, r, std::conj(c));
  }
  return out;
}

const Tensor2& Hopf::comultiply_mono(const Monomial& x) const {
  if (auto it = delta_cache_.find(x); it != delta_cache_.end()) return it->second;
  Tensor2 t;
  t[{Monomial{}, Monomial{}}] = 1.0;
  auto times = [&](int g, int e) {
    for (int s = 0; s < e; ++s) t = tensor_mul(t, gen_delta_[g]);
  };
  times(x.n >= 0 ? 0 : 1, std::abs(x.n));
  times(2, x.m);
  times(3, x.r);
  times(x.k >= 0 ? 4 : 5, std::abs(x.k));
  return delta_cache_.emplace(x, std::move(t)).first->second;
}

Tensor2 Hopf::comultiply(const AlgebraElement& x) const {
  Tensor2 out;
  for (const auto& [m, c] : x.terms)
    for (const auto& [k, v] : comultiply_mono(m)) out[k] += c * v;
  std::erase_if(out, [&](const auto& kv) { return std::abs(kv.second) <= alg_.prune_threshold(); });
  return out;
}

cplx Hopf::counit(const AlgebraElement& x) const {
  cplx s = 0.0;
  for (const auto& [m, c] : x.terms)
    if (m.m == 0 && m.r == 0) s += c;
  return s;
}

const AlgebraElement& Hopf::antipode_mono(const Monomial& x) const {
  if (auto it = s_cache_.find(x); it != s_cache_.end()) return it->second;
  // S reverses products: S(a_n b^m b*^r D^k) = S(D)^k S(b*)^r S(b)^m S(a_n)
  E r = alg_.power(gen_s_[x.k >= 0 ? 4 : 5], std::abs(x.k));
  r = alg_.mul(r, alg_.power(gen_s_[3], x.r));
  r = alg_.mul(r, alg_.power(gen_s_[2], x.m));
  r = alg_.mul(r, alg_.power(gen_s_[x.n >= 0 ? 0 : 1], std::abs(x.n)));
  return s_cache_.emplace(x, std::move(r)).first->second;
}

AlgebraElement Hopf::antipode(const AlgebraElement& x) const {
  E out;
  for (const auto& [m, c] : x.terms) out.add(antipode_mono(m), c);
  return out.prune(alg_.prune_threshold());
}

HopfResiduals Hopf::check_axioms(int max_degree) const {
  HopfResiduals res;
  for (const Monomial& x : monomials_up_to(max_degree)) {
    ++res.monomials;
    const E ex = E::mono(x);
    const Tensor2& dx = comultiply_mono(x);
    double scale = std::max(1.0, max_abs(dx));

    Tensor3 left, right;
    for (const auto& [k, c] : dx) {
      for (const auto& [k1, c1] : comultiply_mono(k.first)) left[{k1.first, k1.second, k.second}] += c * c1;
      for (const auto& [k2, c2] : comultiply_mono(k.second)) right[{k.first, k2.first, k2.second}] += c * c2;
    }
    for (const auto& [k, c] : right) left[k] -= c;
    res.coassociativity = std::max(res.coassociativity, max_abs(left) / scale);

    E cl, cr, sl, sr;
    for (const auto& [k, c] : dx) {
      cl.add(E::mono(k.second), c * counit(E::mono(k.first)));
      cr.add(E::mono(k.first), c * counit(E::mono(k.second)));
      sl.add(alg_.mul(antipode_mono(k.first), E::mono(k.second)), c);
      sr.add(alg_.mul(E::mono(k.first), antipode_mono(k.second)), c);
    }
    const E eps = E::unit(counit(ex));
    res.counit_left = std::max(res.counit_left, element_residual(cl, ex));
    res.counit_right = std::max(res.counit_right, element_residual(cr, ex));
    res.antipode_left = std::max(res.antipode_left, element_residual(sl, eps) / scale);
    res.antipode_right = std::max(res.antipode_right, element_residual(sr, eps) / scale);

    Tensor2 ds = comultiply(alg_.adjoint(ex));
    for (const auto& [k, c] : tensor_adjoint(dx)) ds[k] -= c;
    res.comultiplication_star = std::max(res.comultiplication_star, max_abs(ds) / scale);
  }
  return res;
}

}  // namespace uq2
