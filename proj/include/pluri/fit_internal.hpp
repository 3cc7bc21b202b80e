#pragma once
// Shared pieces of the least-squares driver; not part of the public API.

#include <Eigen/Dense>

#include "pluri/density.hpp"

namespace pluri::detail {

struct PrefixSolution {
  Eigen::MatrixXcd coef;  // count x targets, in the unnormalized basis
  std::vector<double> train_residual;
  int rank = 0;
};

Eigen::MatrixXcd target_values(std::span<const Target> targets, const PointSet& pts);

// a_full is column-major with m rows and at least `count` columns.
PrefixSolution solve_prefix(const std::vector<cd>& a_full, std::size_t m, std::size_t count,
                            const Eigen::MatrixXcd& b);

// sup[d][t] over the validation grid for each prefix length counts[d].
std::vector<std::vector<double>> sup_residuals(const PluriharmonicMap& map, const Basis& basis,
                                               const std::vector<std::size_t>& counts,
                                               const std::vector<PrefixSolution>& sols,
                                               std::span<const Target> targets, const PointSet& validate);

}  // namespace pluri::detail
