#include <algorithm>
#include <cmath>
#include <vector>

#include "pluri/kernels.hpp"

#if defined(PLURI_HAVE_AVX2_TU)
#include <immintrin.h>
#endif

namespace pluri::kernels::avx2 {

#if defined(PLURI_HAVE_AVX2_TU)

namespace {

// Two interleaved complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const cd* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cd* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m256d mul2(__m256d a, __m256d b) {
  const __m256d br = _mm256_movedup_pd(b);
  const __m256d bi = _mm256_permute_pd(b, 0xF);
  const __m256d as = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline cd fold(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return {t[0] + t[2], t[1] + t[3]};
}

}  // namespace

void cmul(const cd* a, const cd* b, cd* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(out + i, mul2(load2(a + i), load2(b + i)));
  if (i < n) scalar::cmul(a + i, b + i, out + i, n - i);
}

void caxpy(cd alpha, const cd* x, cd* y, std::size_t n) {
  const __m256d al = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(y + i, _mm256_add_pd(load2(y + i), mul2(al, load2(x + i))));
  if (i < n) scalar::caxpy(alpha, x + i, y + i, n - i);
}

cd cdotc(const cd* x, const cd* y, std::size_t n) {
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    re = _mm256_fmadd_pd(xv, yv, re);                            // [xr yr, xi yi]
    im = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, im);    // [xi yr, xr yi]
  }
  alignas(32) double t[4];
  _mm256_store_pd(t, im);
  cd s(hsum(re), (t[1] - t[0]) + (t[3] - t[2]));
  if (i < n) s += scalar::cdotc(x + i, y + i, n - i);
  return s;
}

double sum_abs2(const cd* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load2(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  if (i < n) s += scalar::sum_abs2(x + i, n - i);
  return s;
}

double max_abs_diff(const cd* a, const cd* b, std::size_t n) {
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_sub_pd(load2(a + i), load2(b + i));
    const __m256d d2 = _mm256_mul_pd(d, d);
    m = _mm256_max_pd(m, _mm256_hadd_pd(d2, d2));
  }
  alignas(32) double t[4];
  _mm256_store_pd(t, m);
  double r = std::sqrt(std::max(t[0], t[2]));
  if (i < n) r = std::max(r, scalar::max_abs_diff(a + i, b + i, n - i));
  return r;
}

void power_moments(const cd* z, const cd* w, std::size_t n, cd* out, std::size_t orders) {
  std::vector<double> acc(4 * orders, 0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d zv = load2(z + i);
    __m256d p = load2(w + i);
    for (std::size_t k = 0; k < orders; ++k) {
      _mm256_storeu_pd(&acc[4 * k], _mm256_add_pd(_mm256_loadu_pd(&acc[4 * k]), p));
      p = mul2(p, zv);
    }
  }
  for (std::size_t k = 0; k < orders; ++k) out[k] = fold(_mm256_loadu_pd(&acc[4 * k]));
  if (i < n) {
    std::vector<cd> tail(orders);
    scalar::power_moments(z + i, w + i, n - i, tail.data(), orders);
    for (std::size_t k = 0; k < orders; ++k) out[k] += tail[k];
  }
}

#else

void cmul(const cd* a, const cd* b, cd* out, std::size_t n) { scalar::cmul(a, b, out, n); }
void caxpy(cd alpha, const cd* x, cd* y, std::size_t n) { scalar::caxpy(alpha, x, y, n); }
cd cdotc(const cd* x, const cd* y, std::size_t n) { return scalar::cdotc(x, y, n); }
double sum_abs2(const cd* x, std::size_t n) { return scalar::sum_abs2(x, n); }
double max_abs_diff(const cd* a, const cd* b, std::size_t n) { return scalar::max_abs_diff(a, b, n); }
void power_moments(const cd* z, const cd* w, std::size_t n, cd* out, std::size_t orders) {
  scalar::power_moments(z, w, n, out, orders);
}

#endif

}  // namespace pluri::kernels::avx2
