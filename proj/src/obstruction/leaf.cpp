#include <cmath>
#include <numbers>

#include "pluri/elimination.hpp"
#include "pluri/error.hpp"
#include "pluri/lowered_poly.hpp"
#include "pluri/numeric_roots.hpp"
#include "pluri/obstruction.hpp"
#include "pluri/poly_text.hpp"

namespace pluri {

namespace {

constexpr int kBoundaryAngles = 512;
constexpr double kModulusTol = 1e-6;

}  // namespace

Leaf find_leaf(const PluriharmonicMap& map, int j, Point2 x0) {
  if (map.n != 2) throw Error(ErrorCode::Structural, "leaves are built in two variables");
  if (j < 0 || j >= static_cast<int>(map.size())) throw Error(ErrorCode::Structural, "generator index out of range");
  const HoloPoly& g = map.funcs[j].g;
  if (g.is_constant())
    throw Error(ErrorCode::NoLeaf, "generator " + std::to_string(j + 1) + " is holomorphic and has no leaves");

  Leaf leaf;
  leaf.generator = j;
  leaf.phi = g;
  leaf.base_point = x0;
  const cd z[2] = {x0[0], x0[1]};
  leaf.constant = g.evaluate(z);

  std::optional<GaussianRational> k;
  const auto q0 = GaussianRational::rationalize(x0[0]), q1 = GaussianRational::rationalize(x0[1]);
  if (q0 && q1) k = g.substitute(0, *q0).substitute(1, *q1).constant_term();
  if (!k) k = GaussianRational::rationalize(leaf.constant, 10000, 1e-12);
  leaf.exact = k.has_value();
  if (!k) k = GaussianRational(mpq_class(leaf.constant.real()), mpq_class(leaf.constant.imag()));
  if (leaf.exact) leaf.constant = k->to_complex();

  const HoloPoly level = square_free_part(g - HoloPoly::constant(2, *k));
  double best = INFINITY;
  for (const auto& f : split_available_factors(level)) {
    const double v = std::abs(f.evaluate(z));
    if (v < best) {
      best = v;
      leaf.curve = f;
    }
  }
  try {
    for (const auto& p : common_zeros({level, level.derivative(0), level.derivative(1)}))
      if (std::abs(p[0]) <= 1.0 + 1e-9 && std::abs(p[1]) <= 1.0 + 1e-9) leaf.singular_points.push_back(p);
  } catch (const Error&) {
    // a non-reduced numeric level set; no isolated singular points to report
  }
  return leaf;
}

bool holomorphic_along_leaf(const PluriharmonicMap& map, const Leaf& leaf) {
  if (leaf.exact) return holomorphic_along_curve(map, leaf.curve);
  const auto pts = sample_curve(leaf.curve, 200, 0x5eed);
  for (std::size_t j = 0; j < map.size(); ++j) {
    const HoloPoly b = tangential_minor(map, static_cast<int>(j), leaf.phi);
    for (const auto& p : pts) {
      const cd z[2] = {p[0], p[1]};
      if (std::abs(b.evaluate(z)) > 1e-8) return false;
    }
  }
  return true;
}

const char* to_string(BoundaryStatus s) {
  switch (s) {
    case BoundaryStatus::ClosureInTorus: return "closure_in_torus";
    case BoundaryStatus::ExitsOffTorus: return "exits_off_torus";
    case BoundaryStatus::Unknown: return "unknown";
  }
  return "?";
}

BoundaryStatus curve_boundary_check(const HoloPoly& p) {
  if (p.num_vars() != 2 || p.is_constant()) throw Error(ErrorCode::Structural, "boundary check needs a curve");
  const LoweredPoly lp(p);
  std::size_t found = 0;
  bool exits = false;
  for (int v = 0; v < 2; ++v) {
    const int other = 1 - v;
    if (p.degree_in(other) == 0) continue;
    for (int a = 0; a < kBoundaryAngles; ++a) {
      cd pt[2];
      pt[v] = std::polar(1.0, 2 * std::numbers::pi * a / kBoundaryAngles);
      for (cd r : polynomial_roots(lp.univariate_at(other, pt))) {
        const double m = std::abs(r);
        if (m > 1.0 + kModulusTol) continue;
        ++found;
        if (m < 1.0 - kModulusTol) exits = true;
      }
    }
  }
  if (found == 0) throw Error(ErrorCode::DegenerateLeaf, "curve " + to_text(p) + " does not meet the closed bidisk");
  if (exits) return BoundaryStatus::ExitsOffTorus;
  return found >= 4 ? BoundaryStatus::ClosureInTorus : BoundaryStatus::Unknown;
}

BoundaryStatus leaf_boundary_check(const Leaf& leaf) { return curve_boundary_check(leaf.curve); }

}  // namespace pluri
