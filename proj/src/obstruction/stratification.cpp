#include <algorithm>
#include <cmath>
#include <random>

#include "pluri/elimination.hpp"
#include "pluri/error.hpp"
#include "pluri/obstruction.hpp"
#include "pluri/poly_text.hpp"
#include "pluri/zero_tracker.hpp"

namespace pluri {

namespace {

bool in_closed_bidisk(const Point2& x) { return std::abs(x[0]) <= 1.0 + 1e-9 && std::abs(x[1]) <= 1.0 + 1e-9; }

void add_points(std::vector<Point2>& out, const std::vector<Point2>& pts) {
  for (const auto& p : pts) {
    if (!in_closed_bidisk(p)) continue;
    bool dup = false;
    for (const auto& q : out)
      if (std::abs(p[0] - q[0]) < 1e-8 && std::abs(p[1] - q[1]) < 1e-8) dup = true;
    if (!dup) out.push_back(p);
  }
}

double sampled_max_on_domain(const HoloPoly& w) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double best = 0.0;
  for (int s = 0; s < 100; ++s) {
    cd z[2];
    for (cd& c : z) {
      do c = {u(rng), u(rng)};
      while (std::abs(c) > 1.0);
    }
    best = std::max(best, std::abs(w.evaluate(z)));
  }
  return best;
}

double sampled_max_on_curve(const HoloPoly& w, const HoloPoly& curve) {
  double best = 0.0;
  for (const auto& p : sample_curve(curve, 100, 13)) {
    const cd z[2] = {p[0], p[1]};
    best = std::max(best, std::abs(w.evaluate(z)));
  }
  return best;
}

std::string count_text(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

}  // namespace

Stratification stratify(const PluriharmonicMap& map, const SampleDomain& domain, const StratifyOptions& opt) {
  map.validate();
  if (map.n != 2) throw Error(ErrorCode::Structural, "stratify works in two variables");
  const bool torus = domain.kind == DomainKind::Torus2;
  if (!torus && domain.kind != DomainKind::ClosedBidisk)
    throw Error(ErrorCode::Structural, "stratify needs the closed bidisk or the torus");

  Stratification st;
  const MinorSystem top = minor_system(map, 2);
  const VarietyDecomposition dec = common_zero_set(top);
  if (dec.everything_flag) {
    st.aborted = true;
    st.everything = true;
    return st;
  }

  StratumLevel y2;
  y2.index = 2;
  y2.description = "closed bidisk";
  for (const auto& m : top.minors)
    if (!m.det.is_zero()) {
      y2.certificates.push_back({HoloPoly::constant(2, 1), -1, m.det, sampled_max_on_domain(m.det)});
      break;
    }

  StratumLevel y1;
  y1.index = 1;
  y1.description = "boundary plus the zero set of the top minors";
  y1.interior = dec;
  std::vector<Point2> y0_points;
  for (const auto& f : dec.one_dim_factors) {
    if (!curve_meets_open_bidisk(f)) {
      y1.notes.push_back("component " + to_text(f) + " misses the open bidisk");
      continue;
    }
    std::vector<HoloPoly> bs;
    std::vector<HoloPoly> gcd_input{f};
    for (std::size_t j = 0; j < map.size(); ++j) {
      bs.push_back(tangential_minor(map, static_cast<int>(j), f));
      gcd_input.push_back(bs.back());
    }
    const HoloPoly common = gcd_all(gcd_input);
    if (!common.is_constant()) {
      // every generator is holomorphic along {common = 0}
      bool relevant = true;
      if (torus) {
        BoundaryStatus s = BoundaryStatus::Unknown;
        try {
          s = curve_boundary_check(common);
        } catch (const Error&) {
          s = BoundaryStatus::ExitsOffTorus;
        }
        relevant = s == BoundaryStatus::ClosureInTorus && curve_meets_open_bidisk(common);
        if (!relevant)
          y1.notes.push_back("generators are holomorphic along " + to_text(common) + ", which leaves the torus (" +
                             to_string(s) + ")");
      }
      if (relevant) {
        st.aborted = true;
        st.abort_component = common;
        st.levels = {y2, y1};
        return st;
      }
      continue;
    }
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (!bs[j].is_zero() && !divides(f, bs[j])) {
        y1.certificates.push_back({f, static_cast<int>(j), bs[j], sampled_max_on_curve(bs[j], f)});
        break;
      }
    std::vector<HoloPoly> sys{f};
    for (const auto& b : bs) sys.push_back(b);
    add_points(y0_points, common_zeros(sys));
  }
  if (dec.has_curve()) {
    const HoloPoly& g = dec.one_dim;
    add_points(y0_points, common_zeros({g, g.derivative(0), g.derivative(1)}));
  }
  add_points(y0_points, dec.zero_dim);

  StratumLevel y0;
  y0.index = 0;
  y0.description = "boundary plus singular points of the curve and points where the restricted generators are holomorphic";
  y0.points = y0_points;
  y0.notes.push_back(count_text(y0_points.size(), "isolated points in the closed bidisk"));

  st.levels = {y2, y1, y0};
  if (torus) {
    StratumLevel t;
    t.index = -3;
    t.boundary = true;
    t.description = "torus";
    st.levels.push_back(t);
    return st;
  }

  StratumLevel ym1, ym2, ym3;
  ym1.index = -1;
  ym1.boundary = true;
  ym1.description = "topological boundary of the bidisk";
  ym2.index = -2;
  ym2.boundary = true;
  ym2.description = "torus plus the face zero sets E and E'";
  ym3.index = -3;
  ym3.boundary = true;
  ym3.description = "torus plus the branching sets B and B'";
  for (int v = 0; v < 2; ++v) {
    const FaceLocus loc = face_holomorphy_locus(map, v);
    ym1.notes.push_back("faces z" + std::to_string(v + 1) + " = a: holomorphy condition " + to_text(loc.condition) +
                        ", " + count_text(loc.unit_roots.size(), "unimodular roots"));
    if (!opt.boundary_covers) continue;
    try {
      const BoundaryCover cover = boundary_zero_cover(map, v, opt.arc_count, opt.delta);
      auto to_point = [v](const CoverPoint& c) {
        Point2 p;
        p[v] = std::polar(1.0, c.s);
        p[1 - v] = c.z;
        return p;
      };
      for (const auto& c : cover.e_samples) ym2.points.push_back(to_point(c));
      for (const auto& c : cover.b_samples) ym3.points.push_back(to_point(c));
      ym2.notes.push_back("faces z" + std::to_string(v + 1) + " = e^{is}: " +
                          count_text(cover.e_samples.size(), "zero samples over ") +
                          count_text(cover.arcs.size(), "arcs"));
      ym3.notes.push_back("faces z" + std::to_string(v + 1) + " = e^{is}: " +
                          count_text(cover.b_samples.size(), "branching samples, ") +
                          count_text(cover.boxes.size(), "cover boxes of diameter below ") +
                          std::to_string(cover.delta) + (cover.b_approximate ? " (approximate)" : ""));
      for (const auto& n : cover.notes) ym3.notes.push_back(n);
    } catch (const Error& e) {
      ym2.notes.push_back(std::string("boundary cover failed: ") + to_string(e.code()) + ": " + e.what());
    }
  }
  st.levels.push_back(ym1);
  st.levels.push_back(ym2);
  st.levels.push_back(ym3);
  return st;
}

}  // namespace pluri
