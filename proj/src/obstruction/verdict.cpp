#include <cmath>
#include <set>

#include "pluri/elimination.hpp"
#include "pluri/error.hpp"
#include "pluri/numeric_roots.hpp"
#include "pluri/obstruction.hpp"
#include "pluri/poly_text.hpp"

namespace pluri {

namespace {

bool face_witness(const PluriharmonicMap& map, Verdict& v) {
  for (int var = 0; var < 2; ++var) {
    const FaceLocus loc = face_holomorphy_locus(map, var);
    if (!loc.nonempty()) continue;
    v.kind = VerdictKind::BoundaryDisk;
    v.face = FaceWitness{var, loc.all ? cd(1.0) : loc.unit_roots.front(), loc.all};
    v.notes.push_back("every generator is holomorphic on the face z" + std::to_string(var + 1) + " = a");
    return true;
  }
  return false;
}

// Rational base points for leaf scans, origin first.
std::vector<Point2> leaf_base_points() {
  const std::vector<cd> vals = {0.0, 0.5, -0.5, cd(0, 0.5), cd(0, -0.5), cd(0.25, 0.25), cd(-0.25, 0.75)};
  std::vector<Point2> out;
  for (cd a : vals)
    for (cd b : vals) out.push_back({a, b});
  return out;
}

Leaf diagonal_leaf() {
  Leaf leaf;
  leaf.generator = -1;
  leaf.phi = parse_poly("z1 - z2", 2);
  leaf.curve = leaf.phi;
  return leaf;
}

void flag_zero_dim(Verdict& v, const HoloPoly& curve, const VarietyDecomposition& dec) {
  for (const auto& p : dec.zero_dim) {
    const cd z[2] = {p[0], p[1]};
    if (std::abs(curve.evaluate(z)) < 1e-8) v.notes.push_back("witness passes through an isolated point of the minor zero set");
  }
}

Verdict disk_mode(const PluriharmonicMap& map) {
  Verdict v;
  std::vector<HoloPoly> ders;
  for (const auto& fn : map.funcs)
    if (!fn.g.is_constant()) ders.push_back(fn.g.derivative(0));
  if (ders.empty()) {
    v.kind = VerdictKind::InteriorVariety;
    v.curve = HoloPoly(1);
    v.notes.push_back("every generator is holomorphic on the whole disk");
    return v;
  }
  const HoloPoly g = gcd_all(ders);
  Stratification st;
  StratumLevel y1, y0, ym1;
  y1.index = 1;
  y1.description = "closed disk";
  y1.certificates.push_back({HoloPoly::constant(1, 1), -1, ders.front(), 0.0});
  for (int k = 0; k < 16; ++k) {
    const cd z = std::polar(0.5, 2 * 3.141592653589793 * k / 16);
    y1.certificates.back().sampled_max = std::max(y1.certificates.back().sampled_max, std::abs(ders.front().evaluate({&z, 1})));
  }
  y0.index = 0;
  y0.description = "common critical points of the generators";
  if (!g.is_constant()) {
    std::vector<cd> coeffs(g.total_degree() + 1);
    for (const auto& [e, c] : g.terms()) coeffs[e[0]] = c.to_complex();
    for (cd r : polynomial_roots(coeffs))
      if (std::abs(r) <= 1.0 + 1e-9) y0.points.push_back({r, 0.0});
  }
  ym1.index = -1;
  ym1.boundary = true;
  ym1.description = "unit circle";
  st.levels = {y1, y0, ym1};
  v.kind = VerdictKind::Dense;
  v.stratification = st;
  return v;
}

}  // namespace

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Dense: return "dense";
    case VerdictKind::BoundaryDisk: return "boundary_disk";
    case VerdictKind::InteriorVariety: return "interior_variety";
    case VerdictKind::LeafFamily: return "leaf_family";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict analyze(const PluriharmonicMap& map, const SampleDomain& domain, const StratifyOptions& opt) {
  map.validate();
  if (domain.kind == DomainKind::ClosedDisk) {
    if (map.n != 1) throw Error(ErrorCode::Structural, "the closed disk needs a map in one variable");
    return disk_mode(map);
  }
  const bool torus = domain.kind == DomainKind::Torus2;
  if (map.n != 2 || (!torus && domain.kind != DomainKind::ClosedBidisk))
    throw Error(ErrorCode::Structural, "analyze supports the closed bidisk, the torus and the closed disk");

  Verdict v;
  const MinorSystem top = minor_system(map, 2);
  if (top.identically_zero) {
    int j = -1;
    for (std::size_t i = 0; i < map.size() && j < 0; ++i)
      if (!map.funcs[i].is_holomorphic()) j = static_cast<int>(i);
    if (j < 0) {
      v.kind = VerdictKind::LeafFamily;
      v.leaf = diagonal_leaf();
      v.notes.push_back("every generator is holomorphic; the diagonal disk is a witness");
      return v;
    }
    std::set<std::string> seen;
    int unknown = 0;
    std::size_t scanned = 0;
    for (const auto& x0 : leaf_base_points()) {
      Leaf leaf = find_leaf(map, j, x0);
      if (!seen.insert(to_text(leaf.curve)).second) continue;
      ++scanned;
      if (!holomorphic_along_leaf(map, leaf)) {
        v.notes.push_back("leaf " + to_text(leaf.curve) + " fails the holomorphy check");
        continue;
      }
      if (!torus) {
        v.kind = VerdictKind::LeafFamily;
        v.leaf = leaf;
        v.notes.push_back("all top minors vanish; the generators are holomorphic on the level sets of generator " +
                          std::to_string(j + 1));
        return v;
      }
      BoundaryStatus s;
      try {
        s = leaf_boundary_check(leaf);
      } catch (const Error&) {
        continue;
      }
      if (s == BoundaryStatus::ClosureInTorus) {
        v.kind = VerdictKind::LeafFamily;
        v.leaf = leaf;
        v.notes.push_back("leaf " + to_text(leaf.curve) + " has its boundary in the torus");
        return v;
      }
      if (s == BoundaryStatus::Unknown) {
        ++unknown;
        v.notes.push_back("leaf " + to_text(leaf.curve) + ": boundary status unknown");
      }
    }
    if (face_witness(map, v)) return v;
    if (!torus || unknown > 0) {
      v.kind = VerdictKind::Inconclusive;
      return v;
    }
    Stratification st;
    StratumLevel level;
    level.index = -3;
    level.boundary = true;
    level.description = "torus";
    level.notes.push_back(std::to_string(scanned) + " leaves of generator " + std::to_string(j + 1) +
                          " scanned; each leaves the torus");
    st.levels.push_back(level);
    v.kind = VerdictKind::Dense;
    v.stratification = st;
    return v;
  }

  const VarietyDecomposition dec = common_zero_set(top);
  int unknown = 0;
  for (const auto& f : dec.one_dim_factors) {
    if (!holomorphic_along_curve(map, f)) continue;
    if (!curve_meets_open_bidisk(f)) {
      v.notes.push_back("generators are holomorphic along " + to_text(f) + ", which misses the open bidisk");
      continue;
    }
    BoundaryStatus s = BoundaryStatus::ClosureInTorus;
    if (torus) s = curve_boundary_check(f);
    if (s == BoundaryStatus::ClosureInTorus) {
      v.kind = VerdictKind::InteriorVariety;
      v.curve = f;
      flag_zero_dim(v, f, dec);
      return v;
    }
    if (s == BoundaryStatus::Unknown) ++unknown;
    v.notes.push_back("generators are holomorphic along " + to_text(f) + " (" + to_string(s) + ")");
  }
  Stratification st = stratify(map, domain, opt);
  if (st.aborted && st.abort_component) {
    v.kind = VerdictKind::InteriorVariety;
    v.curve = *st.abort_component;
    flag_zero_dim(v, *v.curve, dec);
    return v;
  }
  if (face_witness(map, v)) return v;
  if (unknown > 0) {
    v.kind = VerdictKind::Inconclusive;
    return v;
  }
  v.kind = VerdictKind::Dense;
  v.stratification = std::move(st);
  return v;
}

}  // namespace pluri
