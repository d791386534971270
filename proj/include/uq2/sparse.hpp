#pragma once

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "uq2/qnum.hpp"

namespace uq2 {

template <class Idx>
using SparseVec = std::map<Idx, cplx>;

template <class Idx>
struct SparseOp {
  std::map<Idx, std::vector<std::pair<Idx, cplx>>> cols;

  SparseVec<Idx> apply(const SparseVec<Idx>& v) const {
    SparseVec<Idx> out;
    for (const auto& [src, c] : v) {
      auto it = cols.find(src);
      if (it == cols.end()) continue;
      for (const auto& [dst, w] : it->second) out[dst] += c * w;
    }
    return out;
  }

  const std::vector<std::pair<Idx, cplx>>& column(const Idx& src) const {
    static const std::vector<std::pair<Idx, cplx>> empty;
    auto it = cols.find(src);
    return it == cols.end() ? empty : it->second;
  }
};

template <class Idx>
SparseVec<Idx>& axpy(SparseVec<Idx>& y, cplx a, const SparseVec<Idx>& x) {
  for (const auto& [i, c] : x) y[i] += a * c;
  return y;
}

template <class Idx>
double sup_norm(const SparseVec<Idx>& v) {
  double m = 0.0;
  for (const auto& [i, c] : v) m = std::max(m, std::abs(c));
  return m;
}

template <class Idx>
double l2_norm(const SparseVec<Idx>& v) {
  double s = 0.0;
  for (const auto& [i, c] : v) s += std::norm(c);
  return std::sqrt(s);
}

// <x, y>, conjugate-linear in x
template <class Idx>
cplx inner(const SparseVec<Idx>& x, const SparseVec<Idx>& y) {
  cplx s = 0.0;
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  const bool swapped = &small != &x;
  for (const auto& [i, c] : small) {
    auto it = large.find(i);
    if (it == large.end()) continue;
    s += swapped ? std::conj(it->second) * c : std::conj(c) * it->second;
  }
  return s;
}

}  // namespace uq2
