#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "pluri/elimination.hpp"
#include "pluri/error.hpp"
#include "pluri/obstruction.hpp"
#include "pluri/poly_text.hpp"
#include "poly_printing.hpp"

using namespace pluri;

namespace {

HoloPoly P(const char* s) { return parse_poly(s, 2); }

PluriharmonicMap re_map(std::initializer_list<const char*> gs) {
  std::vector<PluriharmonicFn> fs;
  for (const char* g : gs) fs.push_back(re_part(P(g)));
  return PluriharmonicMap(2, std::move(fs));
}

MinorSystem system_of(std::initializer_list<const char*> dets) {
  MinorSystem ms;
  ms.k = 2;
  ms.n = 2;
  ms.identically_zero = true;
  for (const char* d : dets) {
    ms.minors.push_back({{0, 1}, {0, 1}, P(d)});
    if (!ms.minors.back().det.is_zero()) ms.identically_zero = false;
  }
  return ms;
}

const SampleDomain kBidisk{DomainKind::ClosedBidisk};
const SampleDomain kTorus{DomainKind::Torus2};
const StratifyOptions kFast{true, 4, 0.5};

}  // namespace

TEST_CASE("common zero set") {
  auto d = common_zero_set(system_of({"z1 z2"}));
  CHECK(d.one_dim == P("z1 z2"));
  REQUIRE(d.one_dim_factors.size() == 2);
  CHECK(d.zero_dim.empty());
  CHECK(!d.everything_flag);

  d = common_zero_set(system_of({"0", "0"}));
  CHECK(d.everything_flag);

  d = common_zero_set(system_of({"z1", "z2"}));
  CHECK(d.one_dim.is_constant());
  REQUIRE(d.zero_dim.size() == 1);
  CHECK(std::abs(d.zero_dim[0][0]) < 1e-12);
  CHECK(std::abs(d.zero_dim[0][1]) < 1e-12);

  // points outside the closed bidisk are dropped
  d = common_zero_set(system_of({"z1 - 2", "z2"}));
  CHECK(d.zero_dim.empty());

  // factors divide the curve part and are pairwise coprime
  d = common_zero_set(system_of({"z1^2 z2 (z1 + z2 - 1/2)", "z1 z2^3 (z1 + z2 - 1/2)"}));
  for (std::size_t i = 0; i < d.one_dim_factors.size(); ++i) {
    CHECK(divides(d.one_dim_factors[i], d.one_dim));
    for (std::size_t k = i + 1; k < d.one_dim_factors.size(); ++k)
      CHECK(gcd_bivariate(d.one_dim_factors[i], d.one_dim_factors[k]).is_constant());
  }
}

TEST_CASE("holomorphy along curves") {
  CHECK(holomorphic_along_curve(re_map({"z1 z2", "z1"}), P("z1")));
  CHECK(!holomorphic_along_curve(re_map({"z1^2", "z2^2"}), P("z1")));
  PluriharmonicMap holo(2, {holomorphic(P("z1^3 + z2"))});
  CHECK(holomorphic_along_curve(holo, P("z1 + z2^2 - 1/3")));
  CHECK_THROWS_AS(holomorphic_along_curve(holo, P("5")), Error);
  CHECK(tangential_minor(re_map({"z1^2", "z2^2"}), 1, P("z1")) == P("-2 z2"));
}

TEST_CASE("leaves") {
  auto leaf = find_leaf(re_map({"z1"}), 0, {0.0, 0.3});
  CHECK(leaf.curve == P("z1"));
  CHECK(leaf.exact);

  leaf = find_leaf(re_map({"z1 + z2"}), 0, {0.0, 0.0});
  CHECK(leaf.curve == P("z1 + z2"));

  leaf = find_leaf(re_map({"z1 z2"}), 0, {0.0, 0.5});
  CHECK(leaf.curve == P("z1"));
  REQUIRE(leaf.singular_points.size() == 1);
  CHECK(std::abs(leaf.singular_points[0][0]) + std::abs(leaf.singular_points[0][1]) < 1e-10);

  const cd base[2] = {leaf.base_point[0], leaf.base_point[1]};
  CHECK(std::abs(leaf.curve.evaluate(base)) < 1e-8);

  // irrational base point gives a numeric leaf
  const auto map = re_map({"z1 + z2^2"});
  leaf = find_leaf(map, 0, {std::sqrt(0.1), cd(0, 1) / std::sqrt(7.0)});
  CHECK(!leaf.exact);
  const cd nb[2] = {leaf.base_point[0], leaf.base_point[1]};
  CHECK(std::abs(leaf.curve.evaluate(nb)) < 1e-8);
  CHECK(holomorphic_along_leaf(map, leaf));

  CHECK_THROWS_AS(find_leaf(PluriharmonicMap(2, {holomorphic(P("z1"))}), 0, {0.0, 0.0}), Error);
}

TEST_CASE("boundary status of curves") {
  CHECK(curve_boundary_check(P("z1 + z2 - 1/2")) == BoundaryStatus::ExitsOffTorus);
  CHECK(curve_boundary_check(P("z1")) == BoundaryStatus::ExitsOffTorus);
  CHECK(curve_boundary_check(P("z1 z2 - 1")) == BoundaryStatus::ClosureInTorus);
  CHECK(curve_boundary_check(P("z1 - z2")) == BoundaryStatus::ClosureInTorus);
  CHECK(curve_boundary_check(P("z1 + (1/2,1/3) z2")) == BoundaryStatus::ExitsOffTorus);
  CHECK_THROWS_AS(curve_boundary_check(P("z1 - 2")), Error);
}

TEST_CASE("curve sampling") {
  const auto pts = sample_curve(P("z1^2 - z2 + 1/4"), 50, 3);
  CHECK(pts.size() == 50);
  for (const auto& p : pts) {
    const cd z[2] = {p[0], p[1]};
    CHECK(std::abs(P("z1^2 - z2 + 1/4").evaluate(z)) < 1e-10);
    CHECK(std::max(std::abs(p[0]), std::abs(p[1])) <= 1.0);
  }
  CHECK(curve_meets_open_bidisk(P("z1 z2")));
  CHECK(!curve_meets_open_bidisk(P("z1 z2 - 1")));
  CHECK(!curve_meets_open_bidisk(P("z1 - 3/2")));
}

TEST_CASE("stratification") {
  const auto st = stratify(re_map({"z1^2", "z2^2"}), kBidisk, kFast);
  CHECK(!st.aborted);
  REQUIRE(st.levels.size() >= 3);
  CHECK(st.levels[0].index == 2);
  CHECK(st.levels[1].interior.one_dim == P("z1 z2"));
  CHECK(st.levels[1].certificates.size() == 2);
  REQUIRE(st.levels[2].points.size() == 1);
  CHECK(std::abs(st.levels[2].points[0][0]) + std::abs(st.levels[2].points[0][1]) < 1e-9);
  for (const auto& level : st.levels)
    for (const auto& c : level.certificates) {
      CHECK(c.sampled_max > 1e-6);
      if (c.generator >= 0) CHECK(!divides(c.component, c.witness));
    }

  const auto ab = stratify(re_map({"z1 z2", "z1"}), kBidisk, kFast);
  CHECK(ab.aborted);
  REQUIRE(ab.abort_component);
  CHECK(*ab.abort_component == P("z1"));

  const auto holo = stratify(PluriharmonicMap(2, {holomorphic(P("z1")), holomorphic(P("z2"))}), kBidisk, kFast);
  CHECK(holo.aborted);
  CHECK(holo.everything);
}

TEST_CASE("verdicts") {
  SUBCASE("separating line on the torus") {
    const auto v = analyze(re_map({"z1 + (1/2,1/3) z2"}), kTorus);
    CHECK(v.kind == VerdictKind::Dense);
    CHECK(v.stratification);
    CHECK(!v.has_witness());
  }
  SUBCASE("unimodular slope closes up in the torus") {
    const auto v = analyze(re_map({"z1 + z2"}), kTorus);
    CHECK(v.kind == VerdictKind::LeafFamily);
    REQUIRE(v.leaf);
    CHECK(curve_boundary_check(v.leaf->curve) == BoundaryStatus::ClosureInTorus);
  }
  SUBCASE("single real part on the bidisk") {
    const auto v = analyze(re_map({"z1"}), kBidisk);
    CHECK(v.kind == VerdictKind::LeafFamily);
    REQUIRE(v.leaf);
    CHECK(v.leaf->curve.degree_in(1) == 0);
    CHECK(holomorphic_along_curve(re_map({"z1"}), v.leaf->curve));
  }
  SUBCASE("two squares") {
    const auto v = analyze(re_map({"z1^2", "z2^2"}), kBidisk, kFast);
    CHECK(v.kind == VerdictKind::Dense);
    REQUIRE(v.stratification);
    CHECK(v.stratification->levels.size() == 6);
  }
  SUBCASE("interior variety") {
    const auto map = re_map({"z1 z2", "z1"});
    const auto v = analyze(map, kBidisk, kFast);
    CHECK(v.kind == VerdictKind::InteriorVariety);
    REQUIRE(v.curve);
    CHECK(holomorphic_along_curve(map, *v.curve));
  }
  SUBCASE("face disk") {
    // both generators are constant in z2 on the face z1 = 1
    const auto v = analyze(re_map({"(z1 - 1) z2", "z1^2 + (z1 - 1) z2^2"}), kBidisk, kFast);
    CHECK(v.kind == VerdictKind::BoundaryDisk);
    REQUIRE(v.face);
    CHECK(v.face->frozen_var == 0);
    CHECK(std::abs(v.face->a - 1.0) < 1e-9);
  }
  SUBCASE("one variable") {
    PluriharmonicMap m1(1, {re_part(parse_poly("z1^2", 1))});
    const auto v = analyze(m1, {DomainKind::ClosedDisk});
    CHECK(v.kind == VerdictKind::Dense);
    REQUIRE(v.stratification);
    CHECK(v.stratification->levels[1].points.size() == 1);
    PluriharmonicMap h1(1, {holomorphic(parse_poly("z1^2", 1))});
    CHECK(analyze(h1, {DomainKind::ClosedDisk}).kind == VerdictKind::InteriorVariety);
  }
  SUBCASE("holomorphic only") {
    const auto v = analyze(PluriharmonicMap(2, {holomorphic(P("z1 z2"))}), kTorus);
    CHECK(v.kind == VerdictKind::LeafFamily);
  }
  CHECK_THROWS_AS(analyze(re_map({"z1"}), {DomainKind::FiberDisk}), Error);
}

TEST_CASE("verdict invariants") {
  const std::vector<std::vector<const char*>> maps = {
      {"z1^2", "z2^2"}, {"z1 z2", "z1"}, {"z1^2 + z2", "z2^2 + z1"}, {"z1 z2", "z1^2 - z2^2"},
      {"z1^2 z2", "z1 z2^2 + z1"}};
  for (const auto& gs : maps) {
    std::vector<PluriharmonicFn> fs;
    for (const char* g : gs) fs.push_back(re_part(P(g)));
    const PluriharmonicMap map(2, fs);
    const auto v = analyze(map, kBidisk, kFast);
    CAPTURE(to_text(fs[0].g));
    CHECK(v.has_witness() == (v.kind == VerdictKind::BoundaryDisk || v.kind == VerdictKind::InteriorVariety ||
                              v.kind == VerdictKind::LeafFamily));
    if (v.curve) CHECK(holomorphic_along_curve(map, *v.curve));
    if (v.leaf && v.leaf->generator >= 0) CHECK(holomorphic_along_curve(map, v.leaf->curve));
    if (v.kind == VerdictKind::Dense) {
      // no component of the minor zero set carries holomorphic generators
      const auto dec = common_zero_set(minor_system(map, 2));
      for (const auto& f : dec.one_dim_factors)
        if (curve_meets_open_bidisk(f)) CHECK(!holomorphic_along_curve(map, f));
      for (const auto& level : v.stratification->levels)
        for (const auto& c : level.certificates) CHECK(c.sampled_max > 0.0);
    }

    // scaling a generator's g keeps the verdict
    std::vector<PluriharmonicFn> scaled = fs;
    scaled[0].g *= GaussianRational(mpq_class(3), mpq_class(-2));
    const auto vs = analyze(PluriharmonicMap(2, scaled), kBidisk, kFast);
    CHECK(vs.kind == v.kind);
    if (v.curve && vs.curve) CHECK(*vs.curve == *v.curve);

    // appending a holomorphic generator keeps the verdict
    std::vector<PluriharmonicFn> more = fs;
    more.push_back(holomorphic(P("z1^2 + 3 z2")));
    CHECK(analyze(PluriharmonicMap(2, more), kBidisk, kFast).kind == v.kind);
  }
}
