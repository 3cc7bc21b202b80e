#pragma once

#include <complex>
#include <span>
#include <vector>

namespace pluri {

// All complex roots (with multiplicity) of sum coeffs[k] x^k. Leading
// coefficients below 1e-14 of the largest are dropped. Companion-matrix
// eigenvalues followed by a few Newton steps on the original polynomial.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs);

}  // namespace pluri
