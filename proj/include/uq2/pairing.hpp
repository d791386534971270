#pragma once

#include <map>
#include <utility>
#include <vector>

#include "uq2/fixedpt.hpp"
#include "uq2/torus.hpp"

namespace uq2 {

struct E1Label {
  int i2 = 0;
  int j2 = 0;
  int k = 0;
  auto operator<=>(const E1Label&) const = default;
};

// f_0(i,j,k) = (+-(2w+1) + i(k + j - w)) / |.|, minus sign iff i = -w
cplx f0_value(int i2, int j2, int k);
// Diagonal of F on the level n_r labels with |i - n_r/2| <= x_radius, |k| <= k_radius.
std::map<E1Label, cplx> f0_operator(int n_r, int x_radius, int k_radius);

// Relabeling W_r between level n_r labels and Z^2 sites.
std::pair<int, int> label_to_site(int n_r, const E1Label& l);
E1Label site_to_label(int n_r, int m, int n);
// F_r transported to Z^2.
cplx block_multiplier(int n_r, int m, int n);

struct BlockModel {
  int level = 0;   // r
  int n_r = 0;
  int box = 0;
  double pb_residual = 0.0;  // || rho(b) v - (U x 1) v || over the box interior
  double pd_residual = 0.0;  // || rho(D) v - (e^{-2 pi i theta N} x U) v ||
  double f_unimodular = 0.0; // max | |F| - 1 |
  int vectors = 0;
};

BlockModel block_model(E1Basis& basis, int r, int box);

struct PairingResult {
  std::vector<int> levels;
  std::vector<int> n_r;
  std::vector<IndexResult> per_level;
  int total = 0;
};

PairingResult pairing_index(const OmegaSet& omega, const std::vector<int>& levels, int box, int M, double theta);

// sup over labels with |i - n_r/2| >= W of |<v, T|T|^{-1} v> - f_0|, together with sup C_{i,j,k}.
struct CompactProfile {
  std::vector<int> windows;
  std::vector<double> norm;
  std::vector<double> decay;
  bool monotone = true;
};

CompactProfile compact_part_profile(E1Basis& basis, int n_r, int x_max, int k_radius);

}  // namespace uq2
