#include <algorithm>

#include "pluri/error.hpp"
#include "pluri/numeric_roots.hpp"
#include "pluri/zero_tracker.hpp"

namespace pluri {

std::vector<cd> elementary_from_power_sums(std::span<const cd> p) {
  const std::size_t m = p.size();
  std::vector<cd> e(m + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= m; ++k) {
    cd s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += (i % 2 ? 1.0 : -1.0) * e[k - i] * p[i - 1];
    e[k] = s / static_cast<double>(k);
  }
  return std::vector<cd>(e.begin() + 1, e.end());
}

RecoveredZeros recover_zeros(std::span<const cd> power_sums) {
  if (power_sums.empty()) throw Error(ErrorCode::Structural, "need at least one power sum");
  const auto e = elementary_from_power_sums(power_sums);
  const std::size_t m = e.size();
  // x^m - e1 x^{m-1} + e2 x^{m-2} - ...
  std::vector<cd> coeffs(m + 1);
  coeffs[m] = 1.0;
  for (std::size_t k = 1; k <= m; ++k) coeffs[m - k] = (k % 2 ? -1.0 : 1.0) * e[k - 1];
  RecoveredZeros out;
  out.zeros = polynomial_roots(coeffs);
  for (const cd& z : out.zeros) {
    cd v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
    out.residual = std::max(out.residual, std::abs(v));
  }
  out.flagged = out.residual > 1e-6;
  std::sort(out.zeros.begin(), out.zeros.end(), [](cd a, cd b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace pluri
