#pragma once
// Decision engine for two complex variables: the vanishing locus of the
// top minors, holomorphy of the generators along curves, level-set leaves,
// the stratification used for density, and the final verdict.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pluri/density.hpp"
#include "pluri/pluriharmonic.hpp"

namespace pluri {

using cd = std::complex<double>;
using Point2 = std::array<cd, 2>;

struct VarietyDecomposition {
  // Square-free gcd of the nonzero minors. The constant 1 means there is no
  // curve part; the zero polynomial is used together with everything_flag.
  HoloPoly one_dim{2};
  std::vector<HoloPoly> one_dim_factors;  // pairwise coprime, sorted by text
  std::vector<Point2> zero_dim;           // isolated points in the closed bidisk, off the curve part
  bool everything_flag = false;

  bool has_curve() const { return !everything_flag && !one_dim.is_constant(); }
};

VarietyDecomposition common_zero_set(const MinorSystem& ms);

// B_j = (dg_j/dz1)(dp/dz2) - (dg_j/dz2)(dp/dz1); h_j is holomorphic along
// {p = 0} exactly when p divides B_j.
HoloPoly tangential_minor(const PluriharmonicMap& map, int j, const HoloPoly& p);
bool holomorphic_along_curve(const PluriharmonicMap& map, const HoloPoly& p);

// Points of {p = 0}: for each value of the parameter coordinate, the roots in
// the other one. The parameter is z1 unless p does not involve z2.
std::vector<Point2> curve_points(const HoloPoly& p, std::span<const cd> params);
// Deterministic pseudo-random points of {p = 0} with both moduli <= radius
// when possible (falls back to any curve points).
std::vector<Point2> sample_curve(const HoloPoly& p, std::size_t count, std::uint64_t seed, double radius = 1.0);
// Whether {p = 0} has a point with max(|z1|, |z2|) < 1.
bool curve_meets_open_bidisk(const HoloPoly& p);

struct Leaf {
  int generator = 0;
  HoloPoly phi{2};
  cd constant = 0.0;
  bool exact = true;  // constant is Gaussian-rational and curve is exact
  HoloPoly curve{2};  // component of phi - k through the base point (phi - k~ for numeric leaves)
  Point2 base_point{};
  std::vector<Point2> singular_points;  // singular points of the whole level set
};

// Level set of g_j through x0. Throws NoLeaf when g_j is constant.
Leaf find_leaf(const PluriharmonicMap& map, int j, Point2 x0);
// Holomorphy of every generator along the leaf: exact divisibility for exact
// leaves, otherwise 200 curve samples against threshold 1e-8.
bool holomorphic_along_leaf(const PluriharmonicMap& map, const Leaf& leaf);

enum class BoundaryStatus { ClosureInTorus, ExitsOffTorus, Unknown };
const char* to_string(BoundaryStatus s);

// Intersection of {p = 0} with the faces |z_v| = 1, sampled at 512 angles per
// face family. Throws DegenerateLeaf when the curve misses the closed bidisk.
BoundaryStatus curve_boundary_check(const HoloPoly& p);
BoundaryStatus leaf_boundary_check(const Leaf& leaf);

struct ComponentCertificate {
  HoloPoly component{2};     // 1 for the whole domain
  int generator = -1;        // j with B_j not divisible by the component; -1 for the top level
  HoloPoly witness{2};       // B_j, or the nonzero top minor
  double sampled_max = 0.0;  // max |witness| over 100 component samples
};

struct StratumLevel {
  int index = 0;  // 2, 1, 0, -1, -2, -3
  bool boundary = false;
  std::string description;
  VarietyDecomposition interior;
  std::vector<Point2> points;
  std::vector<ComponentCertificate> certificates;  // for this level minus the next one
  std::vector<std::string> notes;
};

struct Stratification {
  std::vector<StratumLevel> levels;  // top first
  bool aborted = false;
  bool everything = false;                // aborted because every top minor vanishes
  std::optional<HoloPoly> abort_component;  // curve along which every generator is holomorphic
};

struct StratifyOptions {
  bool boundary_covers = true;
  int arc_count = 8;
  double delta = 0.25;
};

Stratification stratify(const PluriharmonicMap& map, const SampleDomain& domain, const StratifyOptions& opt = {});

enum class VerdictKind { Dense, BoundaryDisk, InteriorVariety, LeafFamily, Inconclusive };
const char* to_string(VerdictKind k);

struct FaceWitness {
  int frozen_var = 0;  // the face {z_frozen = a}
  cd a = 1.0;
  bool all = false;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<FaceWitness> face;
  std::optional<HoloPoly> curve;  // InteriorVariety
  std::optional<Leaf> leaf;       // LeafFamily
  std::optional<Stratification> stratification;
  std::vector<std::string> notes;

  bool has_witness() const { return face || curve || leaf; }
};

// Domains: ClosedBidisk and Torus2 for n = 2, ClosedDisk for n = 1.
// Interior witnesses (leaves, curves) are reported before face disks; Dense
// needs neither.
Verdict analyze(const PluriharmonicMap& map, const SampleDomain& domain, const StratifyOptions& opt = {});

}  // namespace pluri
