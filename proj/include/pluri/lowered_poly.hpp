#pragma once

#include <complex>
#include <span>
#include <vector>

#include "pluri/holo_poly.hpp"

namespace pluri {

// Double-precision copy of a HoloPoly, laid out for nested Horner evaluation
// (terms sorted lexicographically, z1 outermost).
class LoweredPoly {
 public:
  using cd = std::complex<double>;

  LoweredPoly() = default;
  explicit LoweredPoly(const HoloPoly& p);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return coeffs_.empty(); }

  cd evaluate(std::span<const cd> point) const;
  // points holds num_vars consecutive coordinates per point.
  void evaluate_batch(std::span<const cd> points, std::span<cd> out) const;
  // Coefficients (ascending) of the polynomial in z_var obtained by fixing
  // every other coordinate to point[other]; point[var] is ignored.
  std::vector<cd> univariate_at(int var, std::span<const cd> point) const;

 private:
  cd horner(std::size_t begin, std::size_t end, int var, std::span<const cd> point) const;

  int num_vars_ = 0;
  std::vector<Exponent> exps_;
  std::vector<cd> coeffs_;
};

}  // namespace pluri
