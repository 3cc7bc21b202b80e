#include <random>
#include <vector>

#include "doctest.h"
#include "pluri/kernels.hpp"

using namespace pluri::kernels;

namespace {

std::vector<cd> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> v(n);
  for (auto& x : v) x = cd(u(rng), u(rng));
  return v;
}

double rel(cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("scalar kernels against direct std::complex loops") {
  std::mt19937_64 rng(7);
  const std::size_t n = 37;
  auto a = random_vec(n, rng), b = random_vec(n, rng);
  std::vector<cd> out(n);
  scalar::cmul(a.data(), b.data(), out.data(), n);
  cd dot = 0.0;
  double s2 = 0.0, md = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(out[i] - a[i] * b[i]) < 1e-15);
    dot += std::conj(a[i]) * b[i];
    s2 += std::norm(a[i]);
    md = std::max(md, std::abs(a[i] - b[i]));
  }
  CHECK(rel(scalar::cdotc(a.data(), b.data(), n), dot) < 1e-14);
  CHECK(std::abs(scalar::sum_abs2(a.data(), n) - s2) < 1e-13);
  CHECK(std::abs(scalar::max_abs_diff(a.data(), b.data(), n) - md) < 1e-15);

  std::vector<cd> mom(5);
  scalar::power_moments(a.data(), b.data(), n, mom.data(), mom.size());
  for (std::size_t k = 0; k < mom.size(); ++k) {
    cd ref = 0.0;
    for (std::size_t i = 0; i < n; ++i) ref += std::pow(a[i], static_cast<int>(k)) * b[i];
    CHECK(rel(mom[k], ref) < 1e-13);
  }
}

TEST_CASE("avx2 kernels match the scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available; scalar path only");
    return;
  }
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 2u, 3u, 8u, 31u, 1000u}) {
    auto a = random_vec(n, rng), b = random_vec(n, rng);
    std::vector<cd> o1(n), o2(n);
    scalar::cmul(a.data(), b.data(), o1.data(), n);
    avx2::cmul(a.data(), b.data(), o2.data(), n);
    CHECK(scalar::max_abs_diff(o1.data(), o2.data(), n) < 1e-15);

    auto y1 = b, y2 = b;
    scalar::caxpy(cd(0.3, -0.7), a.data(), y1.data(), n);
    avx2::caxpy(cd(0.3, -0.7), a.data(), y2.data(), n);
    CHECK(scalar::max_abs_diff(y1.data(), y2.data(), n) < 1e-15);

    CHECK(rel(avx2::cdotc(a.data(), b.data(), n), scalar::cdotc(a.data(), b.data(), n)) < 1e-13);
    CHECK(std::abs(avx2::sum_abs2(a.data(), n) - scalar::sum_abs2(a.data(), n)) <= 1e-13 * std::max(1.0, scalar::sum_abs2(a.data(), n)));
    CHECK(avx2::max_abs_diff(a.data(), b.data(), n) == doctest::Approx(scalar::max_abs_diff(a.data(), b.data(), n)).epsilon(1e-15));

    std::vector<cd> m1(9), m2(9);
    scalar::power_moments(a.data(), b.data(), n, m1.data(), 9);
    avx2::power_moments(a.data(), b.data(), n, m2.data(), 9);
    for (int k = 0; k < 9; ++k) CHECK(rel(m2[k], m1[k]) < 1e-12);
  }
}

TEST_CASE("dispatch honours force_isa") {
  const Isa saved = active_isa();
  force_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  std::vector<cd> a{cd(1, 2), cd(3, 4), cd(5, 6)}, b{cd(0, 1), cd(1, 0), cd(2, 2)}, out(3);
  cmul(a, b, out);
  CHECK(out[0] == cd(-2, 1));
  force_isa(Isa::Avx2);
  CHECK(active_isa() == (avx2_available() ? Isa::Avx2 : Isa::Scalar));
  std::vector<cd> out2(3);
  cmul(a, b, out2);
  CHECK(max_abs_diff(out, out2) < 1e-15);
  force_isa(saved);
}
