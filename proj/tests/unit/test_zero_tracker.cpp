#include <algorithm>
#include <random>

#include "doctest.h"
#include "pluri/error.hpp"
#include "pluri/poly_text.hpp"
#include "pluri/zero_tracker.hpp"

using namespace pluri;

namespace {

ParamFunction poly(const char* s) { return ParamFunction::from_poly(parse_poly(s, 2)); }
const Contour unit{0.0, 1.0, 64};

}  // namespace

TEST_CASE("winding counts") {
  CHECK(winding_count(poly("z1"), 0.0, unit) == 1);
  CHECK(winding_count(poly("1"), 0.0, unit) == 0);
  CHECK(winding_count(poly("z1^2 - z2"), 0.25, unit) == 2);
  CHECK(winding_count(poly("z1 - 2"), 0.0, unit) == 0);
  CHECK(winding_count(poly("z1^3 - 1/8"), 0.0, Contour{0.5, 0.2, 64}) == 1);
  CHECK_THROWS_AS(winding_count(poly("z1 - 1"), 0.0, unit), Error);
  CHECK_THROWS_AS(winding_count(poly("z1"), 0.0, Contour{0.0, 1.0, 48}), Error);
  // finite-difference derivative path
  const auto fd = ParamFunction::from_callable([](cd z, double t) { return std::exp(z) * (z * z - t); });
  CHECK(!fd.has_symbolic_derivative());
  CHECK(winding_count(fd, 0.09, unit) == 2);
}

TEST_CASE("moments are power sums of the enclosed zeros") {
  auto p = zero_moments(poly("z1 - (1/3,1/5)"), 0.0, unit, 1);
  CHECK(std::abs(p[0] - cd(1.0 / 3, 0.2)) < 1e-12);
  p = zero_moments(poly("z1^2 - z2"), 0.2, unit, 2);
  CHECK(std::abs(p[0]) < 1e-12);
  CHECK(std::abs(p[1] - cd(0.4)) < 1e-12);
  p = zero_moments(poly("z1 (z1 - 1/2)"), 0.0, unit, 2);
  CHECK(std::abs(p[0] - cd(0.5)) < 1e-12);
  CHECK(std::abs(p[1] - cd(0.25)) < 1e-12);
  // doubling the starting node count changes nothing beyond 1e-8
  const auto q = zero_moments(poly("z1^3 - z2 z1 + 1/10"), 0.3, Contour{0.0, 1.0, 512}, 3);
  const auto r = zero_moments(poly("z1^3 - z2 z1 + 1/10"), 0.3, unit, 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(q[k] - r[k]) < 1e-8);
}

TEST_CASE("Newton identities recover the zeros") {
  std::vector<cd> p1{cd(0.3, -0.1)};
  CHECK(std::abs(recover_zeros(p1).zeros[0] - p1[0]) < 1e-15);
  const double t = 0.16;
  std::vector<cd> p2{0.0, 2 * t};
  auto z = recover_zeros(p2).zeros;
  CHECK(std::abs(z[0] + 0.4) < 1e-12);
  CHECK(std::abs(z[1] - 0.4) < 1e-12);
  std::vector<cd> p3{0.5, 0.25};
  z = recover_zeros(p3).zeros;
  CHECK(std::abs(z[0]) < 1e-12);
  CHECK(std::abs(z[1] - 0.5) < 1e-12);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> rad(0.0, 0.8), ang(0.0, 6.283185307179586);
  for (int it = 0; it < 50; ++it) {
    const int m = 1 + it % 5;
    std::vector<cd> roots(m), ps(m, 0.0);
    for (auto& r : roots) r = std::polar(rad(rng), ang(rng));
    for (int k = 1; k <= m; ++k)
      for (const cd& r : roots) ps[k - 1] += std::pow(r, k);
    auto rec = recover_zeros(ps);
    CHECK(!rec.flagged);
    for (const cd& r : roots) {
      double best = INFINITY;
      for (const cd& a : rec.zeros) best = std::min(best, std::abs(a - r));
      CHECK(best < 1e-6);
    }
  }
}

TEST_CASE("branching sets") {
  const auto grid = linear_grid(-0.25, 0.25, 101);
  auto tr = branching_set(poly("z1^2 - z2"), unit, grid);
  auto k = tr.branching_points();
  REQUIRE(k.size() == 1);
  CHECK(std::abs(k[0]) < 1e-12);

  tr = branching_set(poly("(z1 - z2) (z1 + 1/2)"), unit, linear_grid(-0.24, 0.24, 49));
  CHECK(tr.branching_points().empty());
  CHECK(tr.segments.size() == 1);
  // matched trajectories move continuously
  for (std::size_t i = 1; i < tr.t_grid.size(); ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(tr.zeros[i][j] - tr.zeros[i - 1][j]) < 0.02);

  tr = branching_set(poly("z1^2"), unit, linear_grid(-0.25, 0.25, 11));
  CHECK(tr.branching_points().empty());

  CHECK_THROWS_AS(branching_set(poly("z1 - z2"), unit, grid), Error);
  tr = track_zeros(poly("z1 - 4 z2"), unit, linear_grid(0.0, 0.5, 10));
  CHECK(tr.segments.size() == 2);

  const auto csv = trajectory_csv(branching_set(poly("z1^2 - z2"), unit, linear_grid(-0.25, 0.25, 5)));
  CHECK(csv.rfind("t,count,re_a1,im_a1,re_a2,im_a2,branching\n", 0) == 0);
}

TEST_CASE("boundary zero covers") {
  auto map = PluriharmonicMap(2, {re_part(parse_poly("z2", 2))});
  auto cov = boundary_zero_cover(map, 0, 4, 0.2);
  CHECK(cov.arcs.size() == 4);
  for (const auto& a : cov.arcs) CHECK(a.generator == 0);
  CHECK(cov.e_samples.empty());
  CHECK(cov.b_samples.empty());
  CHECK(cov.boxes.empty());

  map = PluriharmonicMap(2, {re_part(parse_poly("z1 z2^2", 2))});
  cov = boundary_zero_cover(map, 0, 4, 0.2);
  CHECK(!cov.e_samples.empty());
  for (const auto& e : cov.e_samples) CHECK(std::abs(e.z) < 1e-6);
  CHECK(cov.b_samples.size() == 4);  // shared arc endpoints deduplicated
  CHECK(!cov.boxes.empty());
  for (const auto& b : cov.boxes) CHECK(2.0 * b.half_width * std::sqrt(3.0) < 0.2);
  for (const auto& b : cov.b_samples) CHECK(cov.locate(b.z, b.s) >= 1);
  CHECK(cov.locate(cd(0.95, 0.0), 1.0) == 0);

  CHECK_THROWS_AS(boundary_zero_cover(PluriharmonicMap(2, {re_part(parse_poly("z1", 2))}), 0, 4, 0.2), Error);
}
