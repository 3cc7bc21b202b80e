#include "pluri/upoly.hpp"

#include "pluri/error.hpp"

namespace pluri {

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const GaussianRational& c) { return UPoly({c}); }

UPoly UPoly::x() { return UPoly({GaussianRational(0), GaussianRational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussianRational& UPoly::lead() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroInput, "leading coefficient of zero polynomial");
  return c_.back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(UPoly a, const GaussianRational& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result = constant(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * GaussianRational(static_cast<long>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  return *this * lead().inverse();
}

GaussianRational UPoly::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> UPoly::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

std::vector<std::complex<double>> UPoly::to_complex() const {
  std::vector<std::complex<double>> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.to_complex());
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
  r = a;
  if (a.degree() < b.degree()) {
    q = UPoly();
    return;
  }
  std::vector<GaussianRational> qc(a.degree() - b.degree() + 1);
  const GaussianRational inv = b.lead().inverse();
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const GaussianRational f = r.lead() * inv;
    qc[shift] = f;
    for (int i = 0; i <= db; ++i) r.c_[shift + i] -= f * b.c_[i];
    r.c_.back() = GaussianRational();  // exact cancellation of the leading term
    r.trim();
  }
  q = UPoly(std::move(qc));
}

UPoly UPoly::exact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw Error(ErrorCode::Structural, "inexact univariate division");
  return q;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace pluri
