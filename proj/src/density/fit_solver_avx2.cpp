#include "pluri/fit_solver.hpp"

#if defined(PLURI_HAVE_AVX2_TU)

// Eigen compiled here with AVX2/FMA lives in its own namespace so none of
// its instantiations can be merged with the baseline ones.
#define Eigen pluri_eigen_avx2
#include <Eigen/Dense>
#include <Eigen/QR>

#define PLURI_SOLVER_NS avx2_solver
#include "fit_solver.inc"

#else

namespace pluri::detail::avx2_solver {

int solve(cd* a, std::size_t m, std::size_t p, cd* b, std::size_t t, double threshold, cd* x, double* residual_square) {
  return scalar_solver::solve(a, m, p, b, t, threshold, x, residual_square);
}

}  // namespace pluri::detail::avx2_solver

#endif
