#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "uq2/qnum.hpp"

namespace uq2 {

// a_n b^m (b*)^r D^k, where a_n = a^n for n >= 0 and (a*)^{-n} otherwise.
struct Monomial {
  int n = 0;
  int m = 0;
  int r = 0;
  int k = 0;
  auto operator<=>(const Monomial&) const = default;
  int degree() const;  // |n| + m + r + |k|
};

enum class Gen { a, a_star, b, b_star, D, D_star };

const char* gen_name(Gen g);
Gen gen_from_name(const std::string& s);
constexpr Gen all_gens[] = {Gen::a, Gen::a_star, Gen::b, Gen::b_star, Gen::D, Gen::D_star};

struct AlgebraElement {
  std::map<Monomial, cplx> terms;

  static AlgebraElement unit(cplx c = 1.0);
  static AlgebraElement mono(Monomial x, cplx c = 1.0);
  static AlgebraElement gen(Gen g);

  AlgebraElement& add(const AlgebraElement& y, cplx s = 1.0);
  AlgebraElement scaled(cplx s) const;
  AlgebraElement& prune(double thresh);
  double max_abs() const;
  bool is_scalar() const;
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);

// Normal-ordering engine. Caches are per instance; use one instance per thread.
class Algebra {
 public:
  explicit Algebra(QParam qp, double prune = 1e-14);

  const QParam& param() const { return qp_; }
  double prune_threshold() const { return prune_; }

  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement mul_mono(const Monomial& x, const Monomial& y) const;
  AlgebraElement power(const AlgebraElement& x, int e) const;
  AlgebraElement adjoint(const AlgebraElement& x) const;

  // t^l_{ij} D^{-k}
  AlgebraElement matrix_coefficient(int l2, int i2, int j2, int k) const;
  // |q|^{-i} sqrt(|2l+1|) t^l_{ij} D^{-k}
  AlgebraElement basis_vector(int l2, int i2, int j2, int k) const;
  double verify_action(int l2, int i2, int j2, int k, Gen g) const;

  // Little q-Jacobi expansion of t^l_{ij} in a, a*, b, b*; cross-checks matrix_coefficient.
  AlgebraElement jacobi_form(int l2, int i2, int j2) const;

 private:
  struct AaTerm {
    int n;
    int j;
    double c;
  };
  const std::vector<AaTerm>& aa(int n, int s) const;
  const AlgebraElement& t_coef(int l2, int i2, int j2) const;

  QParam qp_;
  double prune_;
  mutable std::map<std::pair<int, int>, std::vector<AaTerm>> aa_cache_;
  mutable std::map<std::tuple<int, int, int>, AlgebraElement> t_cache_;
};

void check_pw_label(int l2, int i2, int j2);

}  // namespace uq2
