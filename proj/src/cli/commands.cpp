#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "pluri/cli.hpp"
#include "pluri/error.hpp"
#include "pluri/poly_text.hpp"

namespace pluri {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string problem;
  std::string out_dir = ".";
  std::string degrees;
  int resolution = 0;
  double tol = 0.0;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + path.string());
  f << text;
  if (!f) throw Error(ErrorCode::Io, "failed writing " + path.string());
}

void write_json(const fs::path& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

json problem_json(const ProblemFile& p) {
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back({{"g", to_text(g.g)}, {"f", to_text(g.f)}});
  return {{"domain", describe(p.domain)}, {"generators", gens}};
}

StratifyOptions stratify_options(const ProblemFile& p) { return {true, p.arcs, p.delta}; }

int cmd_analyze(const ProblemFile& p, const fs::path& dir, std::ostream& out) {
  const Verdict v = analyze(p.map(), p.domain, stratify_options(p));
  json j = to_json(v);
  j["problem"] = problem_json(p);
  write_json(dir / "verdict.json", j);
  out << "verdict: " << to_string(v.kind) << '\n';
  return v.kind == VerdictKind::Inconclusive ? 2 : 0;
}

int cmd_density(const ProblemFile& p, const fs::path& dir, std::ostream& out) {
  const DensityReport r = decay_report(p.map(), p.domain, p.target_ids(), p.degrees, p.stability, p.cap);
  write_file(dir / "density.csv", r.to_csv());
  json j = to_json(r);
  j["problem"] = problem_json(p);
  write_json(dir / "density.json", j);
  out << "density: " << r.targets.size() << " targets x " << r.degrees.size() << " degrees, "
      << r.train_points << " training points\n";
  return 0;
}

int cmd_track(const ProblemFile& p, const fs::path& dir, std::ostream& out) {
  if (!p.track_poly) throw Error(ErrorCode::Structural, "track-zeros needs a track_poly line");
  const auto grid = linear_grid(p.t_grid.a, p.t_grid.b, p.t_grid.count);
  const ZeroTrajectory tr = track_zeros(ParamFunction::from_poly(*p.track_poly), p.contour, grid);
  write_file(dir / "zeros.csv", trajectory_csv(tr));
  out << "track-zeros: " << tr.t_grid.size() << " parameter values, " << tr.branching_points().size()
      << " branching points\n";
  return 0;
}

int cmd_certify(const ProblemFile& p, const fs::path& dir, std::ostream& out) {
  const PluriharmonicMap map = p.map();
  const PointSet graph = sample_domain(p.domain);
  json results = json::array();
  std::size_t certified = 0;
  for (const auto& q : p.queries) {
    CertificateOutcome c = separation_certificate(map, p.domain, q.z, q.w, graph);
    if (c.certificate && c.certificate->margin <= p.tol) {
      c.certificate.reset();
      c.status = CertificateStatus::NoSeparation;
    }
    if (c.status == CertificateStatus::Certified) ++certified;
    json z = json::array(), w = json::array();
    for (cd v : q.z) z.push_back({v.real(), v.imag()});
    for (cd v : q.w) w.push_back({v.real(), v.imag()});
    json r = to_json(c);
    r["z"] = z;
    r["w"] = w;
    results.push_back(r);
  }
  write_json(dir / "certificates.json",
             {{"problem", problem_json(p)}, {"graph_samples", graph.size()}, {"tol", p.tol}, {"queries", results}});
  out << "certify: " << certified << " of " << p.queries.size() << " queries certified\n";
  return 0;
}

int cmd_stratify(const ProblemFile& p, const fs::path& dir, std::ostream& out) {
  const PluriharmonicMap map = p.map();
  json j;
  j["problem"] = problem_json(p);
  if (p.num_vars() == 1) {
    const Verdict v = analyze(map, p.domain);
    j["stratification"] = v.stratification ? to_json(*v.stratification) : json(nullptr);
  } else {
    json levels = json::array();
    for (const auto& lvl : minor_levels(map)) levels.push_back(to_json(lvl.minors));
    j["minor_systems"] = levels;
    const Stratification st = stratify(map, p.domain, stratify_options(p));
    j["stratification"] = to_json(st);
    out << "stratify: " << st.levels.size() << " levels" << (st.aborted ? " (aborted)" : "") << '\n';
  }
  write_json(dir / "strata.json", j);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density and obstruction analysis for algebras generated by pluriharmonic polynomials"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"analyze", "decide density or report an obstruction disk (verdict.json)"},
      {"density", "least-squares residual sweep over degrees (density.csv, density.json)"},
      {"track-zeros", "argument-principle zero tracking (zeros.csv)"},
      {"certify", "separation certificates for query points (certificates.json)"},
      {"stratify", "minor systems and strata (strata.json)"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--problem", opt.problem, "problem file")->required();
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--degrees", opt.degrees, "degree range a..b:step");
    sub->add_option("--resolution", opt.resolution, "grid resolution");
    sub->add_option("--tol", opt.tol, "tolerance");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    ProblemFile p = load_problem(opt.problem);
    if (!opt.degrees.empty()) p.degrees = parse_degrees(opt.degrees);
    if (opt.resolution > 0) p.domain.resolution = opt.resolution;
    if (opt.tol > 0) p.tol = opt.tol;
    const fs::path dir(opt.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());

    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "analyze") return cmd_analyze(p, dir, out);
    if (name == "density") return cmd_density(p, dir, out);
    if (name == "track-zeros") return cmd_track(p, dir, out);
    if (name == "certify") return cmd_certify(p, dir, out);
    return cmd_stratify(p, dir, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace pluri
