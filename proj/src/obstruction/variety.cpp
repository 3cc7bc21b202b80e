#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pluri/elimination.hpp"
#include "pluri/error.hpp"
#include "pluri/lowered_poly.hpp"
#include "pluri/numeric_roots.hpp"
#include "pluri/obstruction.hpp"

namespace pluri {

namespace {

bool in_closed_bidisk(const Point2& x, double slack = 1e-9) {
  return std::abs(x[0]) <= 1.0 + slack && std::abs(x[1]) <= 1.0 + slack;
}

}  // namespace

VarietyDecomposition common_zero_set(const MinorSystem& ms) {
  if (ms.n != 2) throw Error(ErrorCode::Structural, "common_zero_set needs two variables");
  VarietyDecomposition out;
  const auto minors = ms.nonzero();
  if (minors.empty()) {
    out.everything_flag = true;
    out.one_dim = HoloPoly(2);
    return out;
  }
  const HoloPoly g = gcd_all(minors);
  out.one_dim = square_free_part(g);
  if (!out.one_dim.is_constant()) out.one_dim_factors = split_available_factors(out.one_dim);

  std::vector<HoloPoly> cofactors;
  for (const auto& m : minors) cofactors.push_back(exact_divide(m, g));
  for (const auto& p : common_zeros(cofactors)) {
    if (!in_closed_bidisk(p)) continue;
    const cd z[2] = {p[0], p[1]};
    if (!out.one_dim.is_constant() && std::abs(out.one_dim.evaluate(z)) < 1e-8) continue;
    out.zero_dim.push_back(p);
  }
  return out;
}

HoloPoly tangential_minor(const PluriharmonicMap& map, int j, const HoloPoly& p) {
  if (j < 0 || j >= static_cast<int>(map.size())) throw Error(ErrorCode::Structural, "generator index out of range");
  const HoloPoly& g = map.funcs[j].g;
  return g.derivative(0) * p.derivative(1) - g.derivative(1) * p.derivative(0);
}

bool holomorphic_along_curve(const PluriharmonicMap& map, const HoloPoly& p) {
  if (map.n != 2 || p.num_vars() != 2) throw Error(ErrorCode::Structural, "curves live in two variables");
  if (p.is_constant()) throw Error(ErrorCode::Structural, "holomorphy along a constant polynomial");
  for (std::size_t j = 0; j < map.size(); ++j) {
    const HoloPoly b = tangential_minor(map, static_cast<int>(j), p);
    if (!b.is_zero() && !divides(p, b)) return false;
  }
  return true;
}

std::vector<Point2> curve_points(const HoloPoly& p, std::span<const cd> params) {
  const int solve = p.degree_in(1) > 0 ? 1 : 0;
  const int param = 1 - solve;
  const LoweredPoly lp(p);
  std::vector<Point2> out;
  for (cd t : params) {
    cd pt[2];
    pt[param] = t;
    const auto coeffs = lp.univariate_at(solve, pt);
    for (cd r : polynomial_roots(coeffs)) {
      Point2 x;
      x[param] = t;
      x[solve] = r;
      out.push_back(x);
    }
  }
  return out;
}

std::vector<Point2> sample_curve(const HoloPoly& p, std::size_t count, std::uint64_t seed, double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point2> out;
  std::vector<Point2> spare;
  for (std::size_t attempt = 0; attempt < 50 * count && out.size() < count; ++attempt) {
    const cd t = std::polar(radius * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
    for (const auto& x : curve_points(p, std::span<const cd>(&t, 1))) {
      if (std::abs(x[0]) <= radius && std::abs(x[1]) <= radius) {
        if (out.size() < count) out.push_back(x);
      } else if (spare.size() < count) {
        spare.push_back(x);
      }
    }
  }
  for (std::size_t i = 0; out.size() < count && i < spare.size(); ++i) out.push_back(spare[i]);
  return out;
}

bool curve_meets_open_bidisk(const HoloPoly& p) {
  std::vector<cd> params;
  for (int i = 0; i <= 20; ++i) {
    const double r = std::min(0.05 * i, 0.999);
    const int angles = i == 0 ? 1 : 64;
    for (int k = 0; k < angles; ++k) params.push_back(std::polar(r, 2 * std::numbers::pi * k / angles));
  }
  for (const auto& x : curve_points(p, params))
    if (std::abs(x[0]) < 1.0 - 1e-12 && std::abs(x[1]) < 1.0 - 1e-12) return true;
  return false;
}

}  // namespace pluri
