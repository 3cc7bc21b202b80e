#pragma once

#include <complex>
#include <vector>

#include "pluri/gaussian_rational.hpp"

namespace pluri {

// Exact univariate polynomial over Q(i), coefficients in ascending order,
// no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<GaussianRational> coeffs);
  static UPoly constant(const GaussianRational& c);
  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }
  const GaussianRational& lead() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const GaussianRational& s);
  UPoly operator-() const;
  UPoly pow(unsigned e) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly derivative() const;
  UPoly monic() const;
  GaussianRational evaluate(const GaussianRational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;
  std::vector<std::complex<double>> to_complex() const;

  // Euclidean division; throws on zero divisor.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  // Throws ZeroInput/Structural if b does not divide a.
  static UPoly exact_div(const UPoly& a, const UPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

}  // namespace pluri
