#pragma once
// Exact bivariate elimination over Q(i): gcd, resultant, square-free part,
// divisibility, and the cheap factor splitting used to enumerate curve
// components. Univariate inputs (num_vars == 1) are accepted throughout.

#include <array>
#include <complex>
#include <vector>

#include "pluri/holo_poly.hpp"
#include "pluri/upoly.hpp"

namespace pluri {

// Polynomial in z_main with coefficients in Q(i)[z_other]; index = degree.
using BiPoly = std::vector<UPoly>;

UPoly to_upoly(const HoloPoly& p, int var);  // p must involve only z_var
HoloPoly from_upoly(const UPoly& u, int num_vars, int var);
BiPoly to_bipoly(const HoloPoly& p, int main_var);
HoloPoly from_bipoly(const BiPoly& b, int main_var);

// Monic gcd; throws UndefinedGcd when both inputs are zero.
HoloPoly gcd_bivariate(const HoloPoly& p, const HoloPoly& q);
HoloPoly gcd_all(const std::vector<HoloPoly>& polys);
// p / gcd(p, dp/dz1, dp/dz2), normalized.
HoloPoly square_free_part(const HoloPoly& p);
// Sylvester resultant with respect to z_var; the result does not involve
// z_var. If one input is free of z_var, returns it raised to the other's degree.
HoloPoly resultant_eliminate(const HoloPoly& p, const HoloPoly& q, int var);

// Division of b by the single divisor p with grlex leading-term reduction.
bool divides(const HoloPoly& p, const HoloPoly& b);
// b / p; throws Structural if p does not divide b.
HoloPoly exact_divide(const HoloPoly& b, const HoloPoly& p);

// gcd of the coefficients of b viewed as a polynomial in z_var; monic, free of z_var.
HoloPoly content_in(const HoloPoly& p, int var);

// Pairwise coprime, normalized factors whose product is an associate of the
// square-free p: contents in each variable, their Gaussian-rational linear
// factors, and the remaining primitive part. Sorted by canonical text.
std::vector<HoloPoly> split_available_factors(const HoloPoly& p);

// Gaussian-rational roots of u, verified exactly.
std::vector<GaussianRational> rational_roots(const UPoly& u);

// Common zeros in C^2 of a bivariate system whose gcd is 1, computed from the
// square-free parts of the two eliminants and filtered by residual, then
// Newton-polished. Deduplicated at 1e-8. Throws Structural if the system is
// not zero-dimensional.
std::vector<std::array<std::complex<double>, 2>> common_zeros(const std::vector<HoloPoly>& polys);

}  // namespace pluri
