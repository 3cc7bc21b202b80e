#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "pluri/elimination.hpp"
#include "pluri/error.hpp"
#include "pluri/numeric_roots.hpp"
#include "pluri/zero_tracker.hpp"

namespace pluri {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSamplesPerArc = 17;

double periodic_distance(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)); }

bool in_open_box(const CoverBox& b, cd z, double s) {
  return std::abs(z.real() - b.re) < b.half_width && std::abs(z.imag() - b.im) < b.half_width &&
         periodic_distance(s, b.s) < b.half_width;
}

bool in_closed_box(const CoverBox& b, cd z, double s) {
  return std::abs(z.real() - b.re) <= b.half_width && std::abs(z.imag() - b.im) <= b.half_width &&
         periodic_distance(s, b.s) <= b.half_width;
}

struct FaceGenerator {
  HoloPoly d{2};           // dg_j / dz_free
  bool zero = true;
  std::vector<double> bad;  // arguments of unit roots of the coefficient gcd
};

bool arc_contains(double s0, double s1, double x) {
  const double len = s1 - s0;
  const double off = std::fmod(std::fmod(x - s0, kTwoPi) + kTwoPi, kTwoPi);
  return off <= len + 1e-9 || off >= kTwoPi - 1e-9;
}

}  // namespace

bool BoundaryCover::in_closure(int set, cd z, double s) const {
  if (set == 0) return std::abs(z) >= collar_radius;
  return in_closed_box(boxes.at(set - 1), z, s);
}

int BoundaryCover::locate(cd z, double s) const {
  if (std::abs(z) > collar_radius) return 0;
  if (in_closure(0, z, s)) return -1;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (!in_open_box(boxes[i], z, s)) {
      continue;
    }
    bool blocked = false;
    for (std::size_t j = 0; j < i && !blocked; ++j) blocked = in_closed_box(boxes[j], z, s);
    if (!blocked) return static_cast<int>(i) + 1;
  }
  return -1;
}

BoundaryCover boundary_zero_cover(const PluriharmonicMap& map, int frozen_var, int arc_count, double delta) {
  map.validate();
  if (map.n != 2) throw Error(ErrorCode::Structural, "boundary cover is defined for the bidisk only");
  if (frozen_var != 0 && frozen_var != 1) throw Error(ErrorCode::Structural, "face variable must be 0 or 1");
  if (arc_count < 1) throw Error(ErrorCode::Structural, "need at least one arc");
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::Structural, "delta must lie in (0, 1)");
  const int free_var = 1 - frozen_var;

  std::vector<FaceGenerator> gens(map.size());
  for (std::size_t j = 0; j < map.size(); ++j) {
    FaceGenerator& fg = gens[j];
    fg.d = map.funcs[j].g.derivative(free_var);
    if (fg.d.is_zero()) continue;
    fg.zero = false;
    std::vector<HoloPoly> coeffs;
    for (auto& c : fg.d.coefficients_in(free_var))
      if (!c.is_zero()) coeffs.push_back(std::move(c));
    const UPoly cond = to_upoly(gcd_all(coeffs), frozen_var);
    const auto cc = cond.to_complex();
    for (const cd& r : polynomial_roots(cc))
      if (std::abs(std::abs(r) - 1.0) < 1e-9) fg.bad.push_back(std::arg(r));
  }

  BoundaryCover out;
  out.frozen_var = frozen_var;
  out.delta = delta;
  out.collar_radius = 1.0 - delta;

  for (int i = 0; i < arc_count; ++i) {
    const double s0 = kTwoPi * i / arc_count, s1 = kTwoPi * (i + 1) / arc_count;
    int chosen = -1;
    for (std::size_t j = 0; j < gens.size() && chosen < 0; ++j) {
      if (gens[j].zero) continue;
      bool ok = true;
      for (double b : gens[j].bad)
        if (arc_contains(s0, s1, b)) ok = false;
      if (ok) chosen = static_cast<int>(j);
    }
    if (chosen < 0)
      throw Error(ErrorCode::FaceDisk, "no generator is non-holomorphic on every face of arc " + std::to_string(i));
    out.arcs.push_back({s0, s1, chosen});
  }

  for (int i = 0; i < arc_count; ++i) {
    const auto& arc = out.arcs[i];
    auto val = std::make_shared<LoweredPoly>(gens[arc.generator].d);
    auto der = std::make_shared<LoweredPoly>(gens[arc.generator].d.derivative(free_var));
    auto at = [frozen_var, free_var](cd z, double s) {
      std::array<cd, 2> pt;
      pt[frozen_var] = std::polar(1.0, s);
      pt[free_var] = z;
      return pt;
    };
    const auto G = ParamFunction::from_callable(
        [val, at](cd z, double s) { return val->evaluate(at(z, s)); },
        [der, at](cd z, double s) { return der->evaluate(at(z, s)); });

    const auto s_grid = linear_grid(arc.s0, arc.s1, kSamplesPerArc);
    std::vector<std::vector<cd>> zs(s_grid.size());
    std::vector<cd> disc(s_grid.size(), 1.0);
    std::vector<bool> ok(s_grid.size(), false);
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
      const double s = s_grid[k];
      for (int attempt = 0; attempt < 4 && !ok[k]; ++attempt) {
        const Contour c{0.0, 1.0 - delta / 2.0 - attempt * delta / 16.0, 64};
        try {
          const int m = winding_count(G, s, c);
          std::vector<cd> z;
          if (m > 0) z = recover_zeros(zero_moments(G, s, c, m)).zeros;
          for (cd& a : z) {
            for (int it = 0; it < 5; ++it) {
              const cd dv = G.derivative(a, s, 1.0);
              if (dv == 0.0) break;
              const cd next = a - G.value(a, s) / dv;
              if (!(std::abs(G.value(next, s)) < std::abs(G.value(a, s)))) break;
              a = next;
            }
          }
          cd d = 1.0;
          for (std::size_t p = 0; p < z.size(); ++p)
            for (std::size_t q = p + 1; q < z.size(); ++q) d *= (z[p] - z[q]) * (z[p] - z[q]);
          zs[k] = std::move(z);
          disc[k] = d;
          ok[k] = true;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::ContourTooClose && e.code() != ErrorCode::Quadrature) throw;
        }
      }
      if (!ok[k]) {
        out.notes.push_back("arc " + std::to_string(i) + ": no usable contour at s = " + std::to_string(s));
        continue;
      }
      for (const cd& a : zs[k])
        if (std::abs(G.value(a, s)) < 1e-6) out.e_samples.push_back({a, s, i});
    }

    std::vector<bool> is_b(s_grid.size(), false);
    is_b.front() = is_b.back() = true;
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
      if (!ok[k] || std::abs(disc[k]) >= 1e-6) continue;
      const bool left = k > 0 && ok[k - 1] && std::abs(disc[k - 1]) >= 1e-6;
      const bool right = k + 1 < s_grid.size() && ok[k + 1] && std::abs(disc[k + 1]) >= 1e-6;
      if (left || right) is_b[k] = true;
    }
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
      if (!is_b[k] || !ok[k]) continue;
      for (const cd& a : zs[k]) {
        bool dup = false;
        for (const auto& b : out.b_samples)
          if (std::abs(b.z - a) < 1e-9 && periodic_distance(b.s, s_grid[k]) < 1e-9) dup = true;
        if (!dup) out.b_samples.push_back({a, s_grid[k], i});
      }
    }
  }

  // Greedy disjoint cover of the B samples by cubes of diameter < delta.
  const double base = 0.99 * delta / (2.0 * std::sqrt(3.0));
  bool covered = false;
  for (int attempt = 0; attempt < 10 && !covered; ++attempt) {
    const double hw = base * std::pow(0.97, attempt);
    out.boxes.clear();
    for (const auto& b : out.b_samples)
      if (out.locate(b.z, b.s) < 0) out.boxes.push_back({b.z.real(), b.z.imag(), b.s, hw});
    covered = std::all_of(out.b_samples.begin(), out.b_samples.end(),
                          [&](const CoverPoint& b) { return out.locate(b.z, b.s) >= 0; });
  }
  if (!covered) out.notes.push_back("some B samples lie on box boundaries and stay uncovered");
  return out;
}

}  // namespace pluri
