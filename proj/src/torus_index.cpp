#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "uq2/torus.hpp"

namespace uq2 {

namespace {

using SpMat = Eigen::SparseMatrix<cplx>;
using Mat = Eigen::MatrixXcd;

struct LowSpectrum {
  std::vector<double> eigenvalues;
  Mat vectors;
};

// Penalty operator (1 - A) + W* A W with A = P_B p P_B and W = diag(w).
SpMat penalty(const TorusElement& p, int L, const std::vector<cplx>& w) {
  const int n = 2 * L + 1;
  const int N = n * n;
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(std::size_t(N) * p.coeffs.size() + N);
  for (int j = 0; j < N; ++j) trip.emplace_back(j, j, 1.0);
  for (const auto& [k, c] : p.coeffs) {
    auto [m, dn] = k;
    for (int b = -L; b <= L; ++b) {
      if (b + dn < -L || b + dn > L) continue;
      for (int a = -L; a <= L; ++a) {
        if (a + m < -L || a + m > L) continue;
        int j = (b + L) * n + (a + L);
        int i = (b + dn + L) * n + (a + m + L);
        cplx val = c * std::polar(1.0, -2.0 * std::numbers::pi * std::remainder(p.theta * a * dn, 1.0));
        trip.emplace_back(i, j, -val + std::conj(w[i]) * val * w[j]);
      }
    }
  }
  SpMat H(N, N);
  H.setFromTriplets(trip.begin(), trip.end());
  return H;
}

LowSpectrum lowest(const SpMat& H, int count, std::uint64_t seed) {
  const Eigen::Index N = H.rows();
  const double shift = 1e-4;
  SpMat S = H;
  for (Eigen::Index i = 0; i < N; ++i) S.coeffRef(i, i) += shift;
  Eigen::SimplicialLDLT<SpMat, Eigen::Lower, Eigen::NaturalOrdering<int>> ldlt(S);
  if (ldlt.info() != Eigen::Success) throw InstabilityError("penalty factorization failed");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Mat X(N, count);
  for (Eigen::Index i = 0; i < X.size(); ++i) X.data()[i] = cplx(nd(rng), nd(rng));
  LowSpectrum out;
  Eigen::VectorXd lam;
  for (int it = 0; it < 300; ++it) {
    Mat Y = ldlt.solve(X);
    Eigen::HouseholderQR<Mat> qr(Y);
    Mat Q = qr.householderQ() * Mat::Identity(N, count);
    Mat HQ = H * Q;
    Mat R = Q.adjoint() * HQ;
    R = 0.5 * (R + R.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Mat> es(R);
    lam = es.eigenvalues();
    X = Q * es.eigenvectors();
    Mat res = HQ * es.eigenvectors() - X * lam.asDiagonal();
    double worst = 0.0;
    for (int c = 0; c < count / 2; ++c) worst = std::max(worst, res.col(c).norm());
    if (worst < 1e-11) break;
  }
  out.eigenvalues.assign(lam.data(), lam.data() + lam.size());
  out.vectors = X;
  return out;
}

}  // namespace

cplx dirac_phase(int m, int n) {
  if (m == 0 && n == 0) return 1.0;
  return cplx(m, n) / std::hypot(double(m), double(n));
}

IndexResult compressed_multiplier_index(const TorusElement& p, int L, const Multiplier& f, double threshold,
                                        bool throw_on_gap) {
  const int n = 2 * L + 1;
  std::vector<cplx> w(std::size_t(n) * n), wc(w.size());
  for (int b = -L; b <= L; ++b)
    for (int a = -L; a <= L; ++a) {
      std::size_t i = std::size_t(b + L) * n + (a + L);
      w[i] = f(a, b);
      wc[i] = std::conj(w[i]);
    }
  const int nvec = 8;
  LowSpectrum ker = lowest(penalty(p, L, w), nvec, 1);
  LowSpectrum cok = lowest(penalty(p, L, wc), nvec, 2);

  IndexResult r;
  r.box = L;
  double counted_max = 0.0, uncounted_min = INFINITY;
  std::vector<int> counted_ker, counted_cok;
  auto scan = [&](const LowSpectrum& s, std::vector<double>& sig, int& cnt, std::vector<int>& idx) {
    for (std::size_t c = 0; c < s.eigenvalues.size(); ++c) {
      double sv = std::sqrt(std::max(s.eigenvalues[c], 0.0));
      sig.push_back(sv);
      if (sv < threshold) {
        ++cnt;
        idx.push_back(int(c));
        counted_max = std::max(counted_max, sv);
      } else {
        uncounted_min = std::min(uncounted_min, sv);
      }
    }
  };
  scan(ker, r.kernel_sigma, r.kernel, counted_ker);
  scan(cok, r.cokernel_sigma, r.cokernel, counted_cok);
  r.index = r.kernel - r.cokernel;
  r.gap_ratio = uncounted_min / std::max(counted_max, threshold);

  const double rad2 = 0.25 * L * L;
  auto interior = [&](const Mat& V, const std::vector<int>& idx) {
    for (int c : idx) {
      double wt = 0.0;
      for (int b = -L; b <= L; ++b)
        for (int a = -L; a <= L; ++a)
          if (a * a + b * b <= rad2) wt += std::norm(V(Eigen::Index(b + L) * n + (a + L), c));
      r.interior_weight = std::min(r.interior_weight, wt);
    }
  };
  interior(ker.vectors, counted_ker);
  interior(cok.vectors, counted_cok);
  bool saturated = r.kernel == nvec || r.cokernel == nvec;
  r.certified = !saturated && r.gap_ratio >= 10.0 && r.interior_weight > 0.5;
  if (!r.certified && throw_on_gap) throw InstabilityError("no certified spectral gap in compressed index");
  return r;
}

IndexResult torus_dirac_index(const TorusElement& p, int M, bool throw_on_gap) {
  return compressed_multiplier_index(p, M, dirac_phase, 1e-3, throw_on_gap);
}

}  // namespace uq2
