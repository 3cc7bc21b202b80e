#include <algorithm>
#include <sstream>

#include "pluri/density.hpp"
#include "pluri/error.hpp"
#include "pluri/fit_internal.hpp"
#include "pluri/poly_text.hpp"

namespace pluri {

namespace {

struct SweepResult {
  std::vector<std::vector<double>> train;  // [degree][target]
  std::vector<std::vector<double>> sup;
  std::vector<int> ranks;
  std::size_t train_points = 0, validate_points = 0;
};

SweepResult sweep(const PluriharmonicMap& map, const Basis& basis, const std::vector<std::size_t>& counts,
                  const std::vector<Target>& targets, const SampleDomain& domain) {
  const PointSet train = sample_domain(domain);
  const PointSet validate = validation_grid(domain);
  const std::size_t m = train.size();
  const std::size_t max_count = *std::max_element(counts.begin(), counts.end());
  if (m < 2 * max_count)
    throw Error(ErrorCode::InsufficientSamples,
                "training grid " + describe(domain) + " at resolution " + std::to_string(domain.resolution) + " has " +
                    std::to_string(m) + " points, need at least " + std::to_string(2 * max_count));
  const auto a = evaluate_basis(map, basis, max_count, train);
  const auto b = detail::target_values(targets, train);
  std::vector<detail::PrefixSolution> sols;
  SweepResult r;
  for (std::size_t c : counts) {
    sols.push_back(detail::solve_prefix(a, m, c, b));
    r.train.push_back(sols.back().train_residual);
    r.ranks.push_back(sols.back().rank);
  }
  r.sup = detail::sup_residuals(map, basis, counts, sols, targets, validate);
  r.train_points = m;
  r.validate_points = validate.size();
  return r;
}

}  // namespace

DensityReport decay_report(const PluriharmonicMap& map, const SampleDomain& domain,
                           const std::vector<std::string>& target_ids, const std::vector<int>& degrees,
                           bool with_stability, std::size_t cap) {
  if (degrees.empty()) throw Error(ErrorCode::Structural, "no degrees requested");
  for (std::size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] <= degrees[i - 1]) throw Error(ErrorCode::Structural, "degrees must be strictly increasing");
  if (degrees.front() < 0) throw Error(ErrorCode::Structural, "degrees must be non-negative");
  if (map.n != domain.num_vars()) throw Error(ErrorCode::Structural, "map and domain disagree on dimension");
  if (target_ids.empty()) throw Error(ErrorCode::Structural, "no targets requested");

  const Basis basis = generator_basis(map, degrees.back(), cap);
  std::vector<std::size_t> counts;
  for (int d : degrees) counts.push_back(basis.degree_end[d]);
  std::vector<Target> targets;
  for (const auto& id : target_ids) targets.push_back(make_target(id, map));

  DensityReport rep;
  for (std::size_t j = 0; j < map.size(); ++j) {
    if (j) rep.generators += "; ";
    rep.generators += "Re(" + to_text(map.funcs[j].g) + ") + " + to_text(map.funcs[j].f);
  }
  rep.domain = domain;
  rep.targets = target_ids;
  rep.degrees = degrees;
  rep.basis_sizes = counts;

  const SweepResult base = sweep(map, basis, counts, targets, domain);
  rep.ranks = base.ranks;
  rep.train_points = base.train_points;
  rep.validate_points = base.validate_points;
  const std::size_t T = targets.size(), D = degrees.size();
  rep.train_residuals.assign(T, std::vector<double>(D));
  rep.sup_residuals.assign(T, std::vector<double>(D));
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t d = 0; d < D; ++d) {
      rep.train_residuals[t][d] = base.train[d][t];
      rep.sup_residuals[t][d] = base.sup[d][t];
    }
  if (with_stability) {
    const SweepResult fine = sweep(map, basis, counts, targets, domain.doubled());
    rep.has_stability = true;
    rep.sup_residuals_doubled.assign(T, std::vector<double>(D));
    rep.stability.assign(T, std::vector<double>(D));
    for (std::size_t t = 0; t < T; ++t)
      for (std::size_t d = 0; d < D; ++d) {
        const double a = base.sup[d][t], b = fine.sup[d][t];
        rep.sup_residuals_doubled[t][d] = b;
        rep.stability[t][d] = std::abs(a - b) / std::max({a, b, 1e-12});
      }
  }
  return rep;
}

std::string DensityReport::to_csv() const {
  std::ostringstream os;
  os.precision(12);
  os << "target,degree,train_residual,sup_residual\n";
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (std::size_t d = 0; d < degrees.size(); ++d)
      os << targets[t] << ',' << degrees[d] << ',' << train_residuals[t][d] << ',' << sup_residuals[t][d] << '\n';
  return os.str();
}

}  // namespace pluri
