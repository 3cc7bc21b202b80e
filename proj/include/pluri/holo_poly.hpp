#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pluri/gaussian_rational.hpp"

namespace pluri {

inline constexpr int kMaxVars = 4;
using Exponent = std::array<std::uint16_t, kMaxVars>;

int total_degree(const Exponent& e);

// Graded lex with z1 > z2 > ...; "greater" sorts first so begin() is the
// leading term.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Polynomial in z1..zn with Gaussian-rational coefficients. Zero terms are
// never stored.
class HoloPoly {
 public:
  using Terms = std::map<Exponent, GaussianRational, GrlexGreater>;

  explicit HoloPoly(int num_vars = 2);
  static HoloPoly constant(int num_vars, const GaussianRational& c);
  static HoloPoly variable(int num_vars, int var);
  static HoloPoly monomial(int num_vars, const Exponent& e, const GaussianRational& c = 1);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial
  int total_degree() const;
  int degree_in(int var) const;

  // Require a nonzero polynomial.
  const Exponent& leading_exponent() const;
  const GaussianRational& leading_coefficient() const;
  GaussianRational coefficient(const Exponent& e) const;
  GaussianRational constant_term() const;

  void add_term(const Exponent& e, const GaussianRational& c);

  HoloPoly& operator+=(const HoloPoly& o);
  HoloPoly& operator-=(const HoloPoly& o);
  HoloPoly& operator*=(const HoloPoly& o);
  HoloPoly& operator*=(const GaussianRational& c);
  friend HoloPoly operator+(HoloPoly a, const HoloPoly& b) { return a += b; }
  friend HoloPoly operator-(HoloPoly a, const HoloPoly& b) { return a -= b; }
  friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
  friend HoloPoly operator*(HoloPoly a, const GaussianRational& c) { return a *= c; }
  friend HoloPoly operator*(const GaussianRational& c, HoloPoly a) { return a *= c; }
  HoloPoly operator-() const;
  HoloPoly pow(unsigned e) const;

  friend bool operator==(const HoloPoly& a, const HoloPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HoloPoly& a, const HoloPoly& b) { return !(a == b); }

  HoloPoly derivative(int var) const;
  // Leading coefficient scaled to 1; zero stays zero.
  HoloPoly normalized() const;
  // Coefficient-wise complex conjugate, i.e. the polynomial conj(p(conj z)).
  HoloPoly conj_coefficients() const;
  // Same terms viewed in a ring with a different number of variables; the
  // dropped variables must not occur.
  HoloPoly with_num_vars(int num_vars) const;
  // Substitute z_var = value (exact); the variable count is kept.
  HoloPoly substitute(int var, const GaussianRational& value) const;
  // Coefficients of powers of z_var; entry k collects the terms with
  // exponent k in z_var, that exponent zeroed.
  std::vector<HoloPoly> coefficients_in(int var) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

 private:
  void check_compatible(const HoloPoly& o) const;

  int num_vars_;
  Terms terms_;
};

}  // namespace pluri
