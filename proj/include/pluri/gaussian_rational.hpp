#pragma once

#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace pluri {

// Exact element of Q(i). Arithmetic never rounds; to_complex() is the only
// way to get a double out.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integer shorthand
  GaussianRational(mpq_class re, mpq_class im = 0);
  static GaussianRational imag_unit() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |x|^2, exact
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  // throws std::domain_error on zero
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational pow(unsigned e) const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  // "(re,im)" with each part as "p" or "p/q"
  std::string to_string() const;

  // Continued-fraction rationalization of each part; nullopt unless both parts
  // land within tol with denominators <= max_den.
  static std::optional<GaussianRational> rationalize(std::complex<double> z, long max_den = 1000000,
                                                     double tol = 1e-12);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::optional<mpq_class> rationalize_real(double x, long max_den, double tol);

}  // namespace pluri
