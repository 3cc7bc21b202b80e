#include "pluri/numeric_roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace pluri {

namespace {

using cd = std::complex<double>;

void eval_with_derivative(std::span<const cd> c, cd x, cd& p, cd& dp) {
  p = 0.0;
  dp = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[k];
  }
}

}  // namespace

std::vector<cd> polynomial_roots(std::span<const cd> coeffs) {
  double scale = 0.0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return {};
  std::size_t hi = coeffs.size();
  while (hi > 0 && std::abs(coeffs[hi - 1]) <= 1e-14 * scale) --hi;
  std::size_t lo = 0;
  while (lo < hi && coeffs[lo] == 0.0) ++lo;

  std::vector<cd> roots(lo, cd(0.0));
  const std::span<const cd> c = coeffs.subspan(lo, hi - lo);
  const std::size_t deg = c.empty() ? 0 : c.size() - 1;
  if (deg == 0) return roots;
  if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();

  const std::span<const cd> full = coeffs.subspan(0, hi);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    cd x = ev(i);
    cd p, dp;
    eval_with_derivative(full, x, p, dp);
    for (int it = 0; it < 8 && dp != 0.0; ++it) {
      const cd xn = x - p / dp;
      cd pn, dpn;
      eval_with_derivative(full, xn, pn, dpn);
      if (!(std::abs(pn) < std::abs(p))) break;
      x = xn;
      p = pn;
      dp = dpn;
    }
    roots.push_back(x);
  }
  return roots;
}

}  // namespace pluri
