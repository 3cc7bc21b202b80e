#include <atomic>
#include <cassert>

#include "pluri/kernels.hpp"

namespace pluri::kernels {

namespace {

bool detect_avx2() {
#if defined(PLURI_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect_avx2() ? Isa::Avx2 : Isa::Scalar};
  return isa;
}

bool use_avx2() { return current().load(std::memory_order_relaxed) == Isa::Avx2; }

}  // namespace

bool avx2_available() {
  static const bool ok = detect_avx2();
  return ok;
}

Isa active_isa() { return current().load(); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) return;
  current().store(isa);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void cmul(std::span<const cd> a, std::span<const cd> b, std::span<cd> out) {
  assert(a.size() == b.size() && out.size() == a.size());
  if (use_avx2()) avx2::cmul(a.data(), b.data(), out.data(), a.size());
  else scalar::cmul(a.data(), b.data(), out.data(), a.size());
}

void caxpy(cd alpha, std::span<const cd> x, std::span<cd> y) {
  assert(x.size() == y.size());
  if (use_avx2()) avx2::caxpy(alpha, x.data(), y.data(), x.size());
  else scalar::caxpy(alpha, x.data(), y.data(), x.size());
}

cd cdotc(std::span<const cd> x, std::span<const cd> y) {
  assert(x.size() == y.size());
  return use_avx2() ? avx2::cdotc(x.data(), y.data(), x.size())
                    : scalar::cdotc(x.data(), y.data(), x.size());
}

double sum_abs2(std::span<const cd> x) {
  return use_avx2() ? avx2::sum_abs2(x.data(), x.size()) : scalar::sum_abs2(x.data(), x.size());
}

double max_abs_diff(std::span<const cd> a, std::span<const cd> b) {
  assert(a.size() == b.size());
  return use_avx2() ? avx2::max_abs_diff(a.data(), b.data(), a.size())
                    : scalar::max_abs_diff(a.data(), b.data(), a.size());
}

void power_moments(std::span<const cd> z, std::span<const cd> w, std::span<cd> out) {
  assert(z.size() == w.size());
  if (use_avx2()) avx2::power_moments(z.data(), w.data(), z.size(), out.data(), out.size());
  else scalar::power_moments(z.data(), w.data(), z.size(), out.data(), out.size());
}

}  // namespace pluri::kernels
