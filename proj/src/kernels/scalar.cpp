#include <algorithm>
#include <cmath>

#include "pluri/kernels.hpp"

namespace pluri::kernels::scalar {

// Plain real arithmetic on purpose: std::complex operator* takes the
// Annex G path for inf/nan and is far slower.

void cmul(const cd* a, const cd* b, cd* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = cd(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void caxpy(cd alpha, const cd* x, cd* y, std::size_t n) {
  const double pr = alpha.real(), pi = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = cd(y[i].real() + pr * xr - pi * xi, y[i].imag() + pr * xi + pi * xr);
  }
}

cd cdotc(const cd* x, const cd* y, std::size_t n) {
  double sr = 0.0, si = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    sr += xr * yr + xi * yi;
    si += xr * yi - xi * yr;
  }
  return {sr, si};
}

double sum_abs2(const cd* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

double max_abs_diff(const cd* a, const cd* b, std::size_t n) {
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    m2 = std::max(m2, dr * dr + di * di);
  }
  return std::sqrt(m2);
}

void power_moments(const cd* z, const cd* w, std::size_t n, cd* out, std::size_t orders) {
  for (std::size_t k = 0; k < orders; ++k) out[k] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double pr = w[i].real(), pi = w[i].imag();
    const double zr = z[i].real(), zi = z[i].imag();
    for (std::size_t k = 0; k < orders; ++k) {
      out[k] += cd(pr, pi);
      const double nr = pr * zr - pi * zi;
      pi = pr * zi + pi * zr;
      pr = nr;
    }
  }
}

}  // namespace pluri::kernels::scalar
