#include "pluri/gaussian_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace pluri {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
  const mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero Gaussian rational");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(unsigned e) const {
  GaussianRational result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  return "(" + re_.get_str() + "," + im_.get_str() + ")";
}

std::optional<mpq_class> rationalize_real(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::fabs(a) > 9.0e15) break;
    const mpz_class ai(a);
    const mpz_class h2 = ai * h1 + h0;
    const mpz_class k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2;
    k0 = k1; k1 = k2;
    const mpq_class q(h1, k1);
    if (std::fabs(q.get_d() - x) <= tol) {
      mpq_class out(h1, k1);
      out.canonicalize();
      return out;
    }
    const double frac = r - a;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<GaussianRational> GaussianRational::rationalize(std::complex<double> z, long max_den,
                                                              double tol) {
  auto re = rationalize_real(z.real(), max_den, tol);
  auto im = rationalize_real(z.imag(), max_den, tol);
  if (!re || !im) return std::nullopt;
  return GaussianRational(*re, *im);
}

}  // namespace pluri
