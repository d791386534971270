#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "uq2/algebra.hpp"

namespace uq2 {

using Tensor2 = std::map<std::pair<Monomial, Monomial>, cplx>;
using Tensor3 = std::map<std::tuple<Monomial, Monomial, Monomial>, cplx>;

struct HopfResiduals {
  double coassociativity = 0.0;
  double counit_left = 0.0;
  double counit_right = 0.0;
  double antipode_left = 0.0;
  double antipode_right = 0.0;
  double comultiplication_star = 0.0;  // Delta(x*) vs Delta(x)*
  int monomials = 0;
};

class Hopf {
 public:
  explicit Hopf(const Algebra& alg);

  Tensor2 comultiply(const AlgebraElement& x) const;
  cplx counit(const AlgebraElement& x) const;
  AlgebraElement antipode(const AlgebraElement& x) const;

  Tensor2 tensor_mul(const Tensor2& x, const Tensor2& y) const;
  Tensor2 tensor_adjoint(const Tensor2& x) const;

  // Checks the Hopf axioms on every monomial of total degree <= max_degree.
  HopfResiduals check_axioms(int max_degree) const;

 private:
  const Tensor2& comultiply_mono(const Monomial& x) const;
  const AlgebraElement& antipode_mono(const Monomial& x) const;

  const Algebra& alg_;
  Tensor2 gen_delta_[6];
  AlgebraElement gen_s_[6];
  mutable std::map<Monomial, Tensor2> delta_cache_;
  mutable std::map<Monomial, AlgebraElement> s_cache_;
};

std::vector<Monomial> monomials_up_to(int max_degree);

}  // namespace uq2
