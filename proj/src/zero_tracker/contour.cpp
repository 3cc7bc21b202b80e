#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "pluri/error.hpp"
#include "pluri/kernels.hpp"
#include "pluri/zero_tracker.hpp"

namespace pluri {

ParamFunction ParamFunction::from_poly(const HoloPoly& p) {
  if (p.num_vars() > 2) throw Error(ErrorCode::Structural, "parametrized polynomial needs one or two variables");
  auto lp = std::make_shared<LoweredPoly>(p);
  auto ld = std::make_shared<LoweredPoly>(p.derivative(0));
  const int nv = p.num_vars();
  ParamFunction out;
  out.f_ = [lp, nv](cd z, double t) {
    const cd pt[2] = {z, cd(t, 0.0)};
    return lp->evaluate(std::span<const cd>(pt, nv));
  };
  out.dz_ = [ld, nv](cd z, double t) {
    const cd pt[2] = {z, cd(t, 0.0)};
    return ld->evaluate(std::span<const cd>(pt, nv));
  };
  return out;
}

ParamFunction ParamFunction::from_callable(Fn f, Fn dz) {
  ParamFunction out;
  out.f_ = std::move(f);
  out.dz_ = std::move(dz);
  return out;
}

cd ParamFunction::value(cd z, double t) const { return f_(z, t); }

cd ParamFunction::derivative(cd z, double t, double radius) const {
  if (dz_) return dz_(z, t);
  const double h = 1e-5 * radius;
  return (-f_(z + 2.0 * h, t) + 8.0 * f_(z + h, t) - 8.0 * f_(z - h, t) + f_(z - 2.0 * h, t)) / (12.0 * h);
}

void Contour::validate() const {
  if (!(radius > 0.0)) throw Error(ErrorCode::Structural, "contour radius must be positive");
  if (nodes < 64 || (nodes & (nodes - 1)) != 0)
    throw Error(ErrorCode::Structural, "contour node count must be a power of two, at least 64");
}

namespace {

constexpr int kMaxNodes = 1 << 16;

// Trapezoidal estimates of (1/2 pi i) \oint z^k g'/g dz, k = 0..orders-1.
std::vector<cd> quadrature(const ParamFunction& g, double t, const Contour& c, int nodes, int orders) {
  std::vector<cd> z(nodes), w(nodes);
  double gmin = INFINITY, gmax = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const cd u = std::polar(1.0, 2.0 * std::numbers::pi * k / nodes);
    z[k] = c.center + c.radius * u;
    const cd val = g.value(z[k], t);
    const double a = std::abs(val);
    gmin = std::min(gmin, a);
    gmax = std::max(gmax, a);
    w[k] = g.derivative(z[k], t, c.radius) / val * (c.radius * u) / static_cast<double>(nodes);
  }
  if (!(gmin > 1e-10 * std::max(gmax, 1e-300)) || !std::isfinite(gmax))
    throw Error(ErrorCode::ContourTooClose, "a zero lies on or too near the contour (t = " + std::to_string(t) + ")");
  std::vector<cd> out(orders);
  kernels::power_moments(z, w, out);
  return out;
}

std::vector<cd> converged(const ParamFunction& g, double t, const Contour& c, int orders, double tol) {
  c.validate();
  std::vector<cd> prev = quadrature(g, t, c, c.nodes, orders);
  for (int n = c.nodes * 2; n <= kMaxNodes; n *= 2) {
    std::vector<cd> cur = quadrature(g, t, c, n, orders);
    double diff = 0.0;
    for (int k = 0; k < orders; ++k) diff = std::max(diff, std::abs(cur[k] - prev[k]) / std::max(1.0, std::abs(cur[k])));
    if (diff < tol) return cur;
    prev = std::move(cur);
  }
  throw Error(ErrorCode::Quadrature, "contour quadrature did not converge by 65536 nodes");
}

}  // namespace

int winding_count(const ParamFunction& g, double t, const Contour& c) {
  const cd w = converged(g, t, c, 1, 1e-6)[0];
  const double r = std::round(w.real());
  if (std::abs(w - cd(r, 0.0)) > 1e-3 || r < 0)
    throw Error(ErrorCode::Quadrature, "winding integral is not near a non-negative integer");
  return static_cast<int>(r);
}

std::vector<cd> zero_moments(const ParamFunction& g, double t, const Contour& c, int m) {
  if (m < 0) throw Error(ErrorCode::Structural, "moment order must be non-negative");
  const auto all = converged(g, t, c, m + 1, 1e-8);
  return std::vector<cd>(all.begin() + 1, all.end());
}

}  // namespace pluri
