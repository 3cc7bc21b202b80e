#include <Eigen/Dense>
#include <Eigen/QR>

#include "pluri/fit_solver.hpp"
#include "pluri/kernels.hpp"

#define PLURI_SOLVER_NS scalar_solver
#include "fit_solver.inc"

namespace pluri::detail {

int solve_dense(cd* a, std::size_t m, std::size_t p, cd* b, std::size_t t, double threshold, cd* x,
                double* residual_square) {
  if (kernels::active_isa() == kernels::Isa::Avx2)
    return avx2_solver::solve(a, m, p, b, t, threshold, x, residual_square);
  return scalar_solver::solve(a, m, p, b, t, threshold, x, residual_square);
}

}  // namespace pluri::detail
