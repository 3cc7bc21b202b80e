#pragma once
// Dense least-squares core behind the density fits. Built twice, once
// for the baseline ISA and once with AVX2/FMA; the interface carries no
// Eigen types so the two builds cannot share template instantiations.

#include <complex>
#include <cstddef>

namespace pluri::detail {

using cd = std::complex<double>;

// Householder QR of the m x p matrix a (overwritten), Q^H applied to the
// m x t right-hand sides b (overwritten), then a complete orthogonal
// decomposition of R with relative threshold `threshold`. Writes the p x t
// solution (column-major) to x and the squared residual norm of each
// right-hand side to residual_square; returns the numerical rank. Only raw
// buffers cross this boundary, so no library template is instantiated in
// both ISA builds.
namespace scalar_solver {
int solve(cd* a, std::size_t m, std::size_t p, cd* b, std::size_t t, double threshold, cd* x, double* residual_square);
}
namespace avx2_solver {
int solve(cd* a, std::size_t m, std::size_t p, cd* b, std::size_t t, double threshold, cd* x, double* residual_square);
}

// Picks the variant matching kernels::active_isa().
int solve_dense(cd* a, std::size_t m, std::size_t p, cd* b, std::size_t t, double threshold, cd* x,
                double* residual_square);

}  // namespace pluri::detail
