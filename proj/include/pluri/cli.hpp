#pragma once
// Problem files, JSON reports and the subcommand dispatcher behind the
// `pluri` executable.
//
// Problem files are line-based `key = value` text; `#` starts a comment.
//
//   domain = torus                 # bidisk | torus | disk | fiber <a> | face z<k> <a>
//   g = z1 + (1/2,1/3) z2          # one generator per g line: Re(g) + f
//   g = z1 z2, f = z1^2
//   f = z2                         # holomorphic generator
//   degrees = 2..12:2
//   resolution = 32
//   tol = 1e-8
//   targets = conj_z1, bump
//   query = (1/2,0) (1/2,0) ; (0,1)   # z coordinates ; w coordinates
//   track_poly = z1^2 - z2         # z = z1, t = z2
//   t_grid = -0.25..0.25:101
//   contour = 0 1 64               # center radius nodes

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pluri/density.hpp"
#include "pluri/obstruction.hpp"
#include "pluri/pluriharmonic.hpp"
#include "pluri/zero_tracker.hpp"

namespace pluri {

struct Query {
  std::vector<cd> z;
  std::vector<cd> w;
};

struct TGrid {
  double a = -0.25, b = 0.25;
  int count = 101;
};

struct ProblemFile {
  SampleDomain domain;
  std::vector<PluriharmonicFn> generators;
  std::vector<int> degrees{2, 4, 6, 8, 10, 12};
  double tol = 1e-8;
  std::vector<std::string> targets;  // empty: the standard battery
  std::size_t cap = kDefaultBasisCap;
  bool stability = true;
  int arcs = 8;
  double delta = 0.25;
  std::vector<Query> queries;
  std::optional<HoloPoly> track_poly;
  TGrid t_grid;
  Contour contour{0.0, 1.0, 64};

  int num_vars() const { return domain.num_vars(); }
  PluriharmonicMap map() const { return PluriharmonicMap(num_vars(), generators); }
  std::vector<std::string> target_ids() const { return targets.empty() ? standard_battery(num_vars()) : targets; }
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);
// Canonical text: fixed key order, canonical polynomial text, full-precision numbers.
std::string serialize_problem(const ProblemFile& p);

std::vector<int> parse_degrees(std::string_view text);
cd parse_complex(std::string_view text);
std::string format_complex(cd z);

nlohmann::json to_json(const VarietyDecomposition& d);
nlohmann::json to_json(const Stratification& s);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const MinorSystem& ms);
nlohmann::json to_json(const DensityReport& r);
nlohmann::json to_json(const CertificateOutcome& c);

// Entry point of the executable. Exit status: 0 success, 2 inconclusive, 1 error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pluri
