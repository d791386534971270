#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "uq2/torus.hpp"

namespace uq2 {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// e^{2 pi i theta e}, argument reduced mod 1 first
cplx twist(double theta, long e) { return std::polar(1.0, two_pi * std::remainder(double(e) * theta, 1.0)); }

}  // namespace

TorusElement TorusElement::unit(double theta) { return mono(theta, 0, 0); }

TorusElement TorusElement::mono(double theta, int m, int n, cplx c) {
  TorusElement e;
  e.theta = theta;
  e.coeffs[{m, n}] = c;
  return e;
}

TorusElement& TorusElement::add(const TorusElement& y, cplx s) {
  for (const auto& [k, c] : y.coeffs) coeffs[k] += s * c;
  return *this;
}

TorusElement& TorusElement::prune(double thresh) {
  std::erase_if(coeffs, [thresh](const auto& kv) { return std::abs(kv.second) <= thresh; });
  return *this;
}

double TorusElement::l1_norm() const {
  double s = 0.0;
  for (const auto& [k, c] : coeffs) s += std::abs(c);
  return s;
}

int TorusElement::max_u_degree() const {
  int d = 0;
  for (const auto& [k, c] : coeffs) d = std::max(d, std::abs(k.first));
  return d;
}

TorusElement torus_mul(const TorusElement& x, const TorusElement& y) {
  TorusElement out;
  out.theta = x.theta;
  for (const auto& [kx, cx] : x.coeffs)
    for (const auto& [ky, cy] : y.coeffs) {
      // v^n u^{m'} = e^{-2 pi i theta n m'} u^{m'} v^n
      cplx ph = twist(x.theta, -long(kx.second) * ky.first);
      out.coeffs[{kx.first + ky.first, kx.second + ky.second}] += ph * cx * cy;
    }
  return out;
}

TorusElement torus_adjoint(const TorusElement& x) {
  TorusElement out;
  out.theta = x.theta;
  for (const auto& [k, c] : x.coeffs)
    out.coeffs[{-k.first, -k.second}] += twist(x.theta, -long(k.first) * k.second) * std::conj(c);
  return out;
}

cplx trace(const TorusElement& x) {
  auto it = x.coeffs.find({0, 0});
  return it == x.coeffs.end() ? cplx(0.0) : it->second;
}

TorusElement derivation(const TorusElement& x, int axis) {
  TorusElement out = x;
  for (auto& [k, c] : out.coeffs) c *= cplx(0.0, two_pi * (axis == 1 ? k.first : k.second));
  return out;
}

double compression_norm(const TorusElement& x, int M, int samples) {
  // u e_j = e^{2 pi i (x0 + j theta)} e_j, v e_j = e_{j+1} on l^2(Z), sites j = 0 .. 4M-1
  const int n = 4 * M;
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double x0 = double(s) / samples;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [k, c] : x.coeffs) {
      auto [m, p] = k;
      for (int j = 0; j < n; ++j) {
        int i = j + p;  // v^p first, then u^m acts on the image
        if (i < 0 || i >= n) continue;
        A(i, j) += c * std::polar(1.0, two_pi * m * (x0 + i * x.theta));
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

double default_rieffel_eps(double theta) { return 0.9 * std::min(theta, 1.0 - theta); }

namespace {

// C-infinity step: 0 for s <= 0, 1 for s >= 1
double smooth_step(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  double a = std::exp(-1.0 / s), b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

}  // namespace

TorusElement powers_rieffel(double theta, double eps, int M) {
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("theta must lie in (0,1)");
  if (!(eps > 0.0 && eps < std::min(theta, 1.0 - theta))) throw ParameterError("eps out of range");
  const double hp = std::numbers::pi / 2;
  auto f = [&](double x) {
    if (x < eps) return std::pow(std::sin(hp * smooth_step(x / eps)), 2);
    if (x < theta) return 1.0;
    if (x < theta + eps) return std::pow(std::cos(hp * smooth_step((x - theta) / eps)), 2);
    return 0.0;
  };
  auto g = [&](double x) {
    if (x < theta || x >= theta + eps) return 0.0;
    return 0.5 * std::sin(std::numbers::pi * smooth_step((x - theta) / eps));
  };
  const int N = 1 << 16;
  std::vector<double> fx(N), gx(N);
  for (int j = 0; j < N; ++j) {
    double x = double(j) / N;
    fx[j] = f(x);
    gx[j] = g(x);
  }
  TorusElement p;
  p.theta = theta;
  TorusElement gv;
  gv.theta = theta;
  for (int m = -M; m <= M; ++m) {
    cplx F = 0.0, G = 0.0;
    for (int j = 0; j < N; ++j) {
      if (fx[j] == 0.0 && gx[j] == 0.0) continue;
      cplx e = std::polar(1.0, -two_pi * double((long(m) * j) % N) / N);
      F += fx[j] * e;
      G += gx[j] * e;
    }
    p.coeffs[{m, 0}] = F / double(N);
    gv.coeffs[{m, 1}] = G / double(N);
  }
  p.add(gv);
  p.add(torus_adjoint(gv));
  return p.prune(1e-300);
}

TorusElement powers_rieffel(double theta, int M) { return powers_rieffel(theta, default_rieffel_eps(theta), M); }

RieffelGates rieffel_gates(const TorusElement& p, int M) {
  RieffelGates g;
  TorusElement d = torus_mul(p, p);
  d.add(p, -1.0);
  TorusElement s = torus_adjoint(p);
  s.add(p, -1.0);
  g.idempotency = compression_norm(d, M);
  g.self_adjoint = compression_norm(s, M);
  g.idempotency_l1 = d.l1_norm();
  g.trace_error = std::abs(trace(p) - p.theta);
  return g;
}

double chern_number(const TorusElement& p) {
  TorusElement d = torus_mul(p, p);
  d.add(p, -1.0);
  if (d.l1_norm() > 1e-4) throw std::domain_error("chern_number needs an approximate projection");
  TorusElement d1 = derivation(p, 1), d2 = derivation(p, 2);
  TorusElement c = torus_mul(d1, d2);
  c.add(torus_mul(d2, d1), -1.0);
  // trace(p c) only needs the (0,0) coefficient of the product
  cplx t = 0.0;
  for (const auto& [k, a] : p.coeffs) {
    auto it = c.coeffs.find({-k.first, -k.second});
    if (it == c.coeffs.end()) continue;
    t += a * it->second * twist(p.theta, long(k.second) * k.first);
  }
  return (t / cplx(0.0, two_pi)).real();
}

}  // namespace uq2
