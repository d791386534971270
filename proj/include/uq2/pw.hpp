#pragma once

#include <compare>
#include <string>
#include <vector>

#include "uq2/algebra.hpp"
#include "uq2/sparse.hpp"

namespace uq2 {

// Peter-Weyl label e^l_{i,j,k} with l, i, j stored doubled.
struct PWIndex {
  int l2 = 0;
  int i2 = 0;
  int j2 = 0;
  int k = 0;
  auto operator<=>(const PWIndex&) const = default;
  bool valid() const;
};

using PWVec = SparseVec<PWIndex>;
using PWOp = SparseOp<PWIndex>;

struct Shift {
  int dl2;
  int di2;
  int dj2;
  int dk;
  cplx c;
};

// The printed coefficient table carries conjugated phases on alpha_- and
// alpha_+^+; `printed` reproduces it for comparison only.
enum class Coefficients { corrected, printed };

std::vector<Shift> action_coefficients(Gen g, int l2, int i2, int j2, const QParam& qp,
                                       Coefficients variant = Coefficients::corrected);

struct TruncationWindow {
  int l2_max = 12;
  int k_min = -16;
  int k_max = 16;

  bool contains(const PWIndex& x) const;
  // every product of `depth` generators maps x inside the window
  bool interior(const PWIndex& x, int depth = 1) const;
  std::vector<PWIndex> indices() const;
};

PWOp build_operator(Gen g, const TruncationWindow& w, const QParam& qp);

// Generator action on the untruncated lattice.
PWVec apply(Gen g, const PWVec& v, const QParam& qp, Coefficients variant = Coefficients::corrected);
// Applies word[0] word[1] ... word[n-1] to v (rightmost letter first).
PWVec apply_word(const std::vector<Gen>& word, const PWVec& v, const QParam& qp,
                 Coefficients variant = Coefficients::corrected);
PWVec apply_element(const AlgebraElement& x, const PWVec& v, const QParam& qp);

struct NamedResidual {
  std::string name;
  double value;
};

struct RelationReport {
  std::vector<NamedResidual> residuals;
  int vectors = 0;
  double max() const;
};

// The defining relations, each as an operator identity on depth-2 interior vectors.
RelationReport verify_relations_pw(const TruncationWindow& w, const QParam& qp,
                                   Coefficients variant = Coefficients::corrected);

struct Gammas {
  cplx plus;   // to e^{l+1}_{i,j,k+1}
  double mid;  // diagonal
  cplx minus;  // to e^{l-1}_{i,j,k-1}
};

Gammas bbstar_gammas(int l2, int i2, int j2, const QParam& qp);

// Jacobi data of bb* on A(i,j,k) = span{e^{w+m}_{i,j,k+m}}, m = 0..m_max.
// H(m,m) = main[m], H(m+1,m) = sub[m], H(m,m+1) = super[m].
struct Tridiagonal {
  std::vector<double> main;
  std::vector<cplx> sub;
  std::vector<cplx> super;
  cplx boundary_minus;  // gamma_- at l = w, exactly 0
};

Tridiagonal bbstar_tridiagonal(int i2, int j2, int m_max, const QParam& qp);

}  // namespace uq2
