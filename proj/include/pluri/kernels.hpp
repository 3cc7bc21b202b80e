#pragma once
// Data-parallel complex kernels used by the density fits, batch polynomial
// evaluation and contour quadrature. Every kernel has a scalar reference
// implementation; an AVX2/FMA variant is selected at runtime when the CPU
// supports it. Both must agree to rounding (see tests/unit/test_kernels.cpp).

#include <complex>
#include <cstddef>
#include <span>

namespace pluri::kernels {

using cd = std::complex<double>;

enum class Isa { Scalar, Avx2 };

bool avx2_available();
Isa active_isa();
// Pins the implementation; requesting Avx2 on a machine without it is a no-op.
void force_isa(Isa isa);
const char* isa_name(Isa isa);

// out[i] = a[i] * b[i]; out may alias a or b.
void cmul(std::span<const cd> a, std::span<const cd> b, std::span<cd> out);
// y[i] += alpha * x[i]
void caxpy(cd alpha, std::span<const cd> x, std::span<cd> y);
// sum conj(x[i]) * y[i]
cd cdotc(std::span<const cd> x, std::span<const cd> y);
// sum |x[i]|^2
double sum_abs2(std::span<const cd> x);
// max |a[i] - b[i]|, 0 for empty input
double max_abs_diff(std::span<const cd> a, std::span<const cd> b);
// out[k] = sum_i z[i]^k * w[i] for k = 0 .. out.size()-1
void power_moments(std::span<const cd> z, std::span<const cd> w, std::span<cd> out);

namespace scalar {
void cmul(const cd* a, const cd* b, cd* out, std::size_t n);
void caxpy(cd alpha, const cd* x, cd* y, std::size_t n);
cd cdotc(const cd* x, const cd* y, std::size_t n);
double sum_abs2(const cd* x, std::size_t n);
double max_abs_diff(const cd* a, const cd* b, std::size_t n);
void power_moments(const cd* z, const cd* w, std::size_t n, cd* out, std::size_t orders);
}  // namespace scalar

namespace avx2 {
void cmul(const cd* a, const cd* b, cd* out, std::size_t n);
void caxpy(cd alpha, const cd* x, cd* y, std::size_t n);
cd cdotc(const cd* x, const cd* y, std::size_t n);
double sum_abs2(const cd* x, std::size_t n);
double max_abs_diff(const cd* a, const cd* b, std::size_t n);
void power_moments(const cd* z, const cd* w, std::size_t n, cd* out, std::size_t orders);
}  // namespace avx2

}  // namespace pluri::kernels
