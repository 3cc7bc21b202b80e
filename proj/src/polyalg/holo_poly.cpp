#include "pluri/holo_poly.hpp"

#include <algorithm>
#include <string>

#include "pluri/error.hpp"
#include "pluri/lowered_poly.hpp"

namespace pluri {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

HoloPoly::HoloPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1 || num_vars > kMaxVars)
    throw Error(ErrorCode::Structural, "variable count " + std::to_string(num_vars) + " not in 1.." +
                                           std::to_string(kMaxVars));
}

HoloPoly HoloPoly::constant(int num_vars, const GaussianRational& c) {
  HoloPoly p(num_vars);
  p.add_term(Exponent{}, c);
  return p;
}

HoloPoly HoloPoly::variable(int num_vars, int var) {
  if (var < 0 || var >= num_vars) throw Error(ErrorCode::Structural, "variable index out of range");
  Exponent e{};
  e[var] = 1;
  return monomial(num_vars, e);
}

HoloPoly HoloPoly::monomial(int num_vars, const Exponent& e, const GaussianRational& c) {
  HoloPoly p(num_vars);
  for (int v = num_vars; v < kMaxVars; ++v)
    if (e[v] != 0) throw Error(ErrorCode::Structural, "exponent uses an undeclared variable");
  p.add_term(e, c);
  return p;
}

bool HoloPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int HoloPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return pluri::total_degree(terms_.begin()->first);
}

int HoloPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
  return d;
}

const Exponent& HoloPoly::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const GaussianRational& HoloPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "leading term of zero polynomial");
  return terms_.begin()->second;
}

GaussianRational HoloPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational HoloPoly::constant_term() const { return coefficient(Exponent{}); }

void HoloPoly::add_term(const Exponent& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HoloPoly::check_compatible(const HoloPoly& o) const {
  if (num_vars_ != o.num_vars_)
    throw Error(ErrorCode::Structural, "variable-count mismatch: " + std::to_string(num_vars_) +
                                           " vs " + std::to_string(o.num_vars_));
}

HoloPoly& HoloPoly::operator+=(const HoloPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HoloPoly& HoloPoly::operator-=(const HoloPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
  a.check_compatible(b);
  HoloPoly r(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int v = 0; v < kMaxVars; ++v) e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

HoloPoly& HoloPoly::operator*=(const HoloPoly& o) { return *this = *this * o; }

HoloPoly& HoloPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HoloPoly HoloPoly::operator-() const {
  HoloPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

HoloPoly HoloPoly::pow(unsigned e) const {
  HoloPoly result = constant(num_vars_, 1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

HoloPoly HoloPoly::derivative(int var) const {
  if (var < 0 || var >= num_vars_) throw Error(ErrorCode::Structural, "derivative index out of range");
  HoloPoly r(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * GaussianRational(static_cast<long>(e[var])));
  }
  return r;
}

HoloPoly HoloPoly::normalized() const {
  if (terms_.empty()) return *this;
  const GaussianRational inv = leading_coefficient().inverse();
  HoloPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= inv;
  return r;
}

HoloPoly HoloPoly::conj_coefficients() const {
  HoloPoly r = *this;
  for (auto& [e, v] : r.terms_) v = v.conj();
  return r;
}

HoloPoly HoloPoly::with_num_vars(int num_vars) const {
  HoloPoly r(num_vars);
  for (const auto& [e, c] : terms_) {
    for (int v = num_vars; v < kMaxVars; ++v)
      if (e[v] != 0) throw Error(ErrorCode::Structural, "cannot drop a variable that occurs");
    r.terms_.emplace(e, c);
  }
  return r;
}

HoloPoly HoloPoly::substitute(int var, const GaussianRational& value) const {
  HoloPoly r(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c * value.pow(e[var]));
  }
  return r;
}

std::vector<HoloPoly> HoloPoly::coefficients_in(int var) const {
  std::vector<HoloPoly> out(std::max(0, degree_in(var) + 1), HoloPoly(num_vars_));
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

std::complex<double> HoloPoly::evaluate(std::span<const std::complex<double>> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw Error(ErrorCode::Structural, "evaluation point has wrong length");
  return LoweredPoly(*this).evaluate(point);
}

}  // namespace pluri
