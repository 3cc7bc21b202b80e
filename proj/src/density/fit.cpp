#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "pluri/density.hpp"
#include "pluri/error.hpp"
#include "pluri/fit_internal.hpp"
#include "pluri/fit_solver.hpp"
#include "pluri/kernels.hpp"

namespace pluri::detail {

namespace {

constexpr std::size_t kChunk = 2048;

}  // namespace

Eigen::MatrixXcd target_values(std::span<const Target> targets, const PointSet& pts) {
  Eigen::MatrixXcd b(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(targets.size()));
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (std::size_t i = 0; i < pts.size(); ++i) b(i, t) = targets[t].f(pts.point(i));
  return b;
}

PrefixSolution solve_prefix(const std::vector<cd>& a_full, std::size_t m, std::size_t count,
                            const Eigen::MatrixXcd& b) {
  if (m < 2 * count)
    throw Error(ErrorCode::InsufficientSamples, "training grid has " + std::to_string(m) + " points, need at least " +
                                                    std::to_string(2 * count) + " for " + std::to_string(count) +
                                                    " basis functions");
  // Normalize columns, dropping exact zeros.
  std::vector<std::size_t> kept;
  std::vector<double> norms;
  for (std::size_t c = 0; c < count; ++c) {
    const double nrm = std::sqrt(kernels::sum_abs2({a_full.data() + c * m, m}));
    if (nrm > 1e-200) {
      kept.push_back(c);
      norms.push_back(nrm);
    }
  }
  PrefixSolution sol;
  sol.coef = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(count), b.cols());
  if (kept.empty()) throw Error(ErrorCode::DegenerateBasis, "every basis column vanishes on the grid");

  const std::size_t p = kept.size(), t = static_cast<std::size_t>(b.cols());
  std::vector<cd> a(m * p);
  for (std::size_t k = 0; k < p; ++k) {
    const cd* src = a_full.data() + kept[k] * m;
    const double inv = 1.0 / norms[k];
    for (std::size_t i = 0; i < m; ++i) a[k * m + i] = src[i] * inv;
  }
  std::vector<cd> rhs(b.data(), b.data() + b.size());
  std::vector<cd> x(p * t);
  std::vector<double> residual_square(t);
  sol.rank = solve_dense(a.data(), m, p, rhs.data(), t, 1e-10, x.data(), residual_square.data());
  if (sol.rank < 1) throw Error(ErrorCode::DegenerateBasis, "least-squares system has numerical rank 0");

  sol.train_residual.resize(t);
  for (std::size_t j = 0; j < t; ++j) sol.train_residual[j] = std::sqrt(residual_square[j] / static_cast<double>(m));
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t j = 0; j < t; ++j) sol.coef(static_cast<Eigen::Index>(kept[k]), static_cast<Eigen::Index>(j)) = x[j * p + k] / norms[k];
  return sol;
}

std::vector<std::vector<double>> sup_residuals(const PluriharmonicMap& map, const Basis& basis,
                                               const std::vector<std::size_t>& counts,
                                               const std::vector<PrefixSolution>& sols,
                                               std::span<const Target> targets, const PointSet& validate) {
  const std::size_t max_count = *std::max_element(counts.begin(), counts.end());
  std::vector<std::vector<double>> sup(counts.size(), std::vector<double>(targets.size(), 0.0));
  const std::size_t total = validate.size();
  for (std::size_t start = 0; start < total; start += kChunk) {
    const std::size_t len = std::min(kChunk, total - start);
    PointSet chunk;
    chunk.dim = validate.dim;
    chunk.coords.assign(validate.coords.begin() + start * validate.dim,
                        validate.coords.begin() + (start + len) * validate.dim);
    const std::vector<cd> cols = evaluate_basis(map, basis, max_count, chunk);
    const Eigen::Map<const Eigen::MatrixXcd> v(cols.data(), static_cast<Eigen::Index>(len),
                                               static_cast<Eigen::Index>(max_count));
    const Eigen::MatrixXcd tv = target_values(targets, chunk);
    for (std::size_t d = 0; d < counts.size(); ++d) {
      const Eigen::MatrixXcd fit = v.leftCols(static_cast<Eigen::Index>(counts[d])) * sols[d].coef;
      for (std::size_t t = 0; t < targets.size(); ++t) {
        const double r = kernels::max_abs_diff({tv.col(t).data(), len}, {fit.col(t).data(), len});
        sup[d][t] = std::max(sup[d][t], r);
      }
    }
  }
  return sup;
}

}  // namespace pluri::detail

namespace pluri {

std::vector<FitResult> fit_residuals(const PluriharmonicMap& map, const Basis& basis, std::size_t count,
                                     std::span<const Target> targets, const PointSet& train,
                                     const PointSet& validate) {
  if (count < 1) throw Error(ErrorCode::DegenerateBasis, "empty basis");
  const std::size_t m = train.size();
  if (m < 2 * count)
    throw Error(ErrorCode::InsufficientSamples, "training grid has " + std::to_string(m) + " points, need at least " +
                                                    std::to_string(2 * count));
  const auto a = evaluate_basis(map, basis, count, train);
  const auto b = detail::target_values(targets, train);
  std::vector<detail::PrefixSolution> sols{detail::solve_prefix(a, m, count, b)};
  const auto sup = detail::sup_residuals(map, basis, {count}, sols, targets, validate);
  std::vector<FitResult> out(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) out[t] = {sols[0].train_residual[t], sup[0][t], sols[0].rank};
  return out;
}

FitResult fit_residual(const PluriharmonicMap& map, const Basis& basis, std::size_t count, const Target& target,
                       const PointSet& train, const PointSet& validate) {
  return fit_residuals(map, basis, count, std::span<const Target>(&target, 1), train, validate)[0];
}

}  // namespace pluri
