// Acceptance suite: one [PASS]/[FAIL] line per criterion. With arguments,
// runs only the named criteria; exit status is nonzero when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pluri/density.hpp"
#include "pluri/elimination.hpp"
#include "pluri/error.hpp"
#include "pluri/obstruction.hpp"
#include "pluri/pluriharmonic.hpp"
#include "pluri/poly_text.hpp"
#include "pluri/zero_tracker.hpp"

using namespace pluri;

namespace {

// Pinned tolerances.
constexpr double kFloorSup = 0.9;           // obstruction floor for conj(z2) on the fiber
constexpr double kDecayRatio = 0.5;         // sup(d = 12) <= ratio * sup(d = 2)
constexpr double kStability = 0.10;         // relative change under grid doubling
constexpr double kMomentTol = 1e-8;         // p1, p2 against 0 and 2t
constexpr double kZeroTol = 1e-6;           // recovered zeros against +-sqrt(t)
constexpr int kFiberResolution = 96;
constexpr int kBidiskResolution = 32;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED: " << what << ';';
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<void(Outcome&)> run;
};

HoloPoly P(const std::string& s, int nv = 2) { return parse_poly(s, nv); }

PluriharmonicMap re_map(const std::vector<std::string>& gs) {
  std::vector<PluriharmonicFn> fs;
  for (const auto& g : gs) fs.push_back(re_part(P(g)));
  return PluriharmonicMap(2, fs);
}

const SampleDomain kTorus{DomainKind::Torus2};
const SampleDomain kBidisk{DomainKind::ClosedBidisk, kBidiskResolution};

void line_on_torus(Outcome& o, const std::string& c) {
  const auto map = re_map({"z1 + " + c + " z2"});
  const Verdict v = analyze(map, kTorus);
  o.detail << " verdict=" << to_string(v.kind) << ';';
  o.require(v.kind == VerdictKind::Dense, "verdict is not dense");
  if (v.leaf) o.detail << " witness leaf " << to_text(v.leaf->curve) << ';';
  for (const char* k : {"0", "1/2", "(0,1/3)", "(-1/4,1/4)", "(1/3,-1/5)"}) {
    const HoloPoly line = P("z1 + " + c + " z2 - " + std::string(k));
    try {
      const BoundaryStatus s = curve_boundary_check(line);
      o.detail << " k=" << k << ":" << to_string(s);
      o.require(s == BoundaryStatus::ExitsOffTorus, "line with k = " + std::string(k) + " does not exit the torus");
    } catch (const Error&) {
      o.detail << " k=" << k << ":misses";
    }
  }
  o.detail << ';';
}

void obstruction_floor(Outcome& o) {
  const auto map = re_map({"z1"});
  const Verdict v = analyze(map, kBidisk);
  o.detail << " verdict=" << to_string(v.kind) << ';';
  o.require(v.kind == VerdictKind::LeafFamily, "verdict is not a leaf family");
  if (v.leaf) {
    const HoloPoly& c = v.leaf->curve;
    o.detail << " leaf " << to_text(c) << ';';
    o.require(c.total_degree() == 1 && c.degree_in(1) == 0, "leaf is not of the form z1 = const");
    o.require(holomorphic_along_curve(map, c), "generator not holomorphic on the leaf");
  }
  std::vector<int> degrees;
  for (int d = 2; d <= 12; ++d) degrees.push_back(d);
  const auto rep = decay_report(map, {DomainKind::FiberDisk, kFiberResolution, 0.0}, {"conj_z2"}, degrees, false);
  double lo = INFINITY;
  for (double s : rep.sup_residuals[0]) lo = std::min(lo, s);
  o.detail << " min sup residual over d=2..12: " << lo << ';';
  o.require(lo >= kFloorSup, "sup residual dropped below the floor");
}

void dense_with_curve(Outcome& o) {
  const auto map = re_map({"z1^2", "z2^2"});
  const Stratification st = stratify(map, kBidisk);
  o.require(!st.aborted && st.levels.size() >= 3, "stratification aborted");
  if (st.levels.size() >= 3) {
    o.require(st.levels[1].interior.one_dim == P("z1 z2"), "curve stratum is not z1 z2 = 0");
    const auto& pts = st.levels[2].points;
    o.require(pts.size() == 1 && std::abs(pts[0][0]) + std::abs(pts[0][1]) < 1e-9, "point stratum is not the origin");
    o.require(st.levels[1].certificates.size() == 2, "missing a component certificate");
    for (const auto& c : st.levels[1].certificates)
      o.require(c.generator >= 0 && !divides(c.component, c.witness) && c.sampled_max > 0,
                "certificate for " + to_text(c.component) + " is not valid");
    o.detail << " strata: " << to_text(st.levels[1].interior.one_dim) << " > " << pts.size() << " point;";
  }
  const Verdict v = analyze(map, kBidisk);
  o.detail << " verdict=" << to_string(v.kind) << ';';
  o.require(v.kind == VerdictKind::Dense, "verdict is not dense");
  const auto rep = decay_report(map, kBidisk, {"conj_z1"}, {2, 12}, true);
  const double s2 = rep.sup_residuals[0][0], s12 = rep.sup_residuals[0][1];
  o.detail << " sup d=2: " << s2 << ", d=12: " << s12 << ", stability " << rep.stability[0][0] << " / "
           << rep.stability[0][1] << ';';
  o.require(s12 <= kDecayRatio * s2, "sup residual did not halve");
  for (double s : rep.stability[0]) o.require(s <= kStability, "sup residual unstable under grid doubling");
}

void interior_variety(Outcome& o) {
  const auto map = re_map({"z1 z2", "z1"});
  const Verdict v = analyze(map, kBidisk);
  o.detail << " verdict=" << to_string(v.kind) << ';';
  o.require(v.kind == VerdictKind::InteriorVariety, "verdict is not an interior variety");
  o.require(v.curve && *v.curve == P("z1"), "witness is not z1");
  o.require(tangential_minor(map, 0, P("z1")) == P("-z1"), "B1 != -z1");
  o.require(tangential_minor(map, 1, P("z1")).is_zero(), "B2 != 0");
  o.require(holomorphic_along_curve(map, P("z1")), "z1 fails exact divisibility");
}

void zero_tracking(Outcome& o) {
  const auto g = ParamFunction::from_poly(P("z1^2 - z2"));
  const Contour c{0.0, 1.0, 64};
  std::vector<double> grid;
  for (int i = 0; i < 101; ++i) grid.push_back(-0.25 + 0.5 * (i + 1) / 102.0);
  const double step = grid[1] - grid[0];
  double p1 = 0, p2 = 0, zr = 0;
  bool counts = true;
  for (double t : grid) {
    counts &= winding_count(g, t, c) == 2;
    const auto m = zero_moments(g, t, c, 2);
    p1 = std::max(p1, std::abs(m[0]));
    p2 = std::max(p2, std::abs(m[1] - 2 * t));
    const auto rz = recover_zeros(m);
    const cd s = std::sqrt(cd(t));
    const double e = std::min(std::max(std::abs(rz.zeros[0] - s), std::abs(rz.zeros[1] + s)),
                              std::max(std::abs(rz.zeros[0] + s), std::abs(rz.zeros[1] - s)));
    zr = std::max(zr, e);
  }
  const ZeroTrajectory tr = branching_set(g, c, grid, true);
  const auto k = tr.branching_points();
  o.detail << " max|p1|=" << p1 << " max|p2-2t|=" << p2 << " max zero error=" << zr << " branching=" << k.size()
           << " point(s);";
  o.require(counts, "winding count differs from 2");
  o.require(p1 <= kMomentTol, "p1 off");
  o.require(p2 <= kMomentTol, "p2 off");
  o.require(zr <= kZeroTol, "recovered zeros off");
  bool near_zero = !k.empty();
  for (double t : k) near_zero &= std::abs(t) <= step;
  o.require(near_zero, "branching set is not {0}");
}

HoloPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> coef(-4, 4), ex(0, max_deg), nterms(1, 5);
  HoloPoly p(2);
  for (int i = nterms(rng); i > 0; --i) {
    Exponent e{};
    e[0] = static_cast<std::uint16_t>(ex(rng));
    e[1] = static_cast<std::uint16_t>(std::min(ex(rng), max_deg - e[0]));
    p.add_term(e, GaussianRational(mpq_class(coef(rng), 1 + std::abs(coef(rng))), coef(rng)));
  }
  return p;
}

void wedge_identity(Outcome& o) {
  std::mt19937_64 rng(2024);
  int ok = 0;
  for (int it = 0; it < 50; ++it) {
    const int N = 2 + it % 3;
    std::vector<PluriharmonicFn> fs;
    for (int j = 0; j < N; ++j) fs.push_back({random_poly(rng, 3), random_poly(rng, 3)});
    const PluriharmonicMap map(2, fs);
    if (wedge_power_check(map, 1) && wedge_power_check(map, 2)) ++ok;
  }
  o.detail << ' ' << ok << "/50 maps;";
  o.require(ok == 50, "identity failed");
}

std::vector<PluriharmonicMap> certificate_corpus() {
  return {re_map({"z1"}), re_map({"z1 z2"}), re_map({"z1^2", "z2^2"}), re_map({"z1 z2", "z1"}),
          PluriharmonicMap(2, {re_part(P("z1 + (1/2,1/3) z2")), {P("z2^2 - z1"), P("(0,1) z1 z2")}})};
}

void certificates(Outcome& o) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0), mag(0.05, 2.0), ang(-3.14159, 3.14159);
  auto in_disk = [&]() {
    cd c;
    do c = {u(rng), u(rng)};
    while (std::abs(c) > 1.0);
    return c;
  };
  const PointSet graph = sample_domain(kBidisk);
  int certified = 0, sound = 0, none = 0, total = 0;
  double min_margin = INFINITY;
  for (const auto& map : certificate_corpus()) {
    for (int q = 0; q < 100; ++q, ++total) {
      const cd z[2] = {in_disk(), in_disk()};
      auto w = map.evaluate(z);
      for (cd& x : w) x += std::polar(mag(rng), ang(rng));
      const auto out = separation_certificate(map, kBidisk, z, w, graph);
      if (out.status != CertificateStatus::Certified) continue;
      ++certified;
      min_margin = std::min(min_margin, out.certificate->margin);
      bool holds = out.certificate->margin > 0;
      for (int s = 0; s < 10000 && holds; ++s) {
        const cd x[2] = {in_disk(), in_disk()};
        const auto h = map.evaluate(x);
        holds = out.certificate->evaluate(map, x, h) < out.certificate->value_at_query;
      }
      if (holds) ++sound;
    }
    for (int q = 0; q < 100; ++q) {
      const cd z[2] = {in_disk(), in_disk()};
      const auto w = map.evaluate(z);
      if (separation_certificate(map, kBidisk, z, w, graph).status == CertificateStatus::OnGraph) ++none;
    }
  }
  o.detail << ' ' << certified << '/' << total << " off-graph certified, " << sound << " sound on fresh samples, min margin "
           << min_margin << "; " << none << "/500 on-graph queries rejected;";
  o.require(certified == total && sound == total, "off-graph query without a sound certificate");
  o.require(none == 500, "on-graph query certified");
}

struct CorpusEntry {
  std::string label;
  PluriharmonicMap map;
  SampleDomain domain;
};

std::vector<CorpusEntry> verdict_corpus() {
  return {
      {"line c=1 on torus", re_map({"z1 + z2"}), kTorus},
      {"line c=i on torus", re_map({"z1 + (0,1) z2"}), kTorus},
      {"line c=1/2+i/3 on torus", re_map({"z1 + (1/2,1/3) z2"}), kTorus},
      {"Re z1 on bidisk", re_map({"z1"}), kBidisk},
      {"squares on bidisk", re_map({"z1^2", "z2^2"}), kBidisk},
      {"product and coordinate", re_map({"z1 z2", "z1"}), kBidisk},
      {"face disk", re_map({"(z1 - 1) z2", "z1^2 + (z1 - 1) z2^2"}), kBidisk},
      {"mixed", re_map({"z1^2 + z2", "z2^2 + z1"}), kBidisk},
  };
}

std::string witness_key(const Verdict& v) {
  if (v.face) {
    std::ostringstream s;
    s << "face z" << v.face->frozen_var + 1 << " " << std::round(v.face->a.real() * 1e9) << " "
      << std::round(v.face->a.imag() * 1e9);
    return s.str();
  }
  if (v.curve) return "curve " + to_text(v.curve->normalized());
  if (v.leaf) return "leaf " + to_text(v.leaf->curve.normalized());
  return "none";
}

void invariance(Outcome& o) {
  const StratifyOptions fast{false};
  int checked = 0;
  for (const auto& e : verdict_corpus()) {
    const Verdict base = analyze(e.map, e.domain, fast);
    const std::string key = witness_key(base);
    for (std::size_t j = 0; j < e.map.size(); ++j)
      for (const GaussianRational& s : {GaussianRational(mpq_class(-3, 2)), GaussianRational(mpq_class(2), mpq_class(-1))}) {
        auto fs = e.map.funcs;
        fs[j].g *= s;
        const Verdict v = analyze(PluriharmonicMap(2, fs), e.domain, fast);
        o.require(v.kind == base.kind && witness_key(v) == key, e.label + ": scaling generator changed the verdict");
        ++checked;
      }
    for (const char* f : {"z1", "z1^2 z2 - (0,2) z2^3"}) {
      auto fs = e.map.funcs;
      fs.push_back(holomorphic(P(f)));
      const Verdict v = analyze(PluriharmonicMap(2, fs), e.domain, fast);
      o.require(v.kind == base.kind && witness_key(v) == key, e.label + ": appending " + f + " changed the verdict");
      ++checked;
    }
  }
  o.detail << ' ' << checked << " variants over " << verdict_corpus().size() << " corpus maps;";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"1-c1", "line generator on the torus, c = 1: dense, lines exit the torus",
       [](Outcome& o) { line_on_torus(o, "1"); }},
      {"1-ci", "line generator on the torus, c = i: dense, lines exit the torus",
       [](Outcome& o) { line_on_torus(o, "(0,1)"); }},
      {"1-c2", "line generator on the torus, c = 1/2 + i/3: dense, lines exit the torus",
       [](Outcome& o) { line_on_torus(o, "(1/2,1/3)"); }},
      {"2", "obstruction floor for Re z1 on the bidisk", obstruction_floor},
      {"3", "dense with a nontrivial minor zero set", dense_with_curve},
      {"4", "interior variety detection", interior_variety},
      {"5", "residue-moment zero tracking for z^2 - t", zero_tracking},
      {"6", "wedge power identity on random maps", wedge_identity},
      {"7", "separation certificates", certificates},
      {"8", "verdict invariance under scaling and holomorphic generators", invariance},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what() << ';';
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %s: %s |%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    ++ran;
    if (!o.pass) ++failed;
  }
  if (ran == 0) {
    std::printf("no criterion matched\n");
    return 1;
  }
  return failed ? 1 : 0;
}
