#include "pluri/lowered_poly.hpp"

#include <algorithm>
#include <numeric>

#include "pluri/error.hpp"

namespace pluri {

LoweredPoly::LoweredPoly(const HoloPoly& p) : num_vars_(p.num_vars()) {
  std::vector<std::pair<Exponent, cd>> t;
  t.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) t.emplace_back(e, c.to_complex());
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto& [e, c] : t) {
    exps_.push_back(e);
    coeffs_.push_back(c);
  }
}

namespace {

inline std::complex<double> ipow(std::complex<double> x, int k) {
  std::complex<double> r = 1.0;
  while (k > 0) {
    if (k & 1) r *= x;
    k >>= 1;
    if (k) x *= x;
  }
  return r;
}

}  // namespace

LoweredPoly::cd LoweredPoly::horner(std::size_t begin, std::size_t end, int var,
                                    std::span<const cd> point) const {
  if (var == num_vars_) {
    cd s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += coeffs_[i];
    return s;
  }
  const cd x = point[var];
  cd acc = 0.0;
  int prev = -1;
  std::size_t i = begin;
  while (i < end) {
    const int d = exps_[i][var];
    std::size_t j = i;
    while (j < end && exps_[j][var] == d) ++j;
    if (prev >= 0) acc *= ipow(x, prev - d);
    acc += horner(i, j, var + 1, point);
    prev = d;
    i = j;
  }
  if (prev > 0) acc *= ipow(x, prev);
  return acc;
}

LoweredPoly::cd LoweredPoly::evaluate(std::span<const cd> point) const {
  if (static_cast<int>(point.size()) < num_vars_)
    throw Error(ErrorCode::Structural, "evaluation point has wrong length");
  if (coeffs_.empty()) return 0.0;
  return horner(0, coeffs_.size(), 0, point);
}

void LoweredPoly::evaluate_batch(std::span<const cd> points, std::span<cd> out) const {
  const std::size_t n = static_cast<std::size_t>(num_vars_);
  if (points.size() != out.size() * n) throw Error(ErrorCode::Structural, "batch size mismatch");
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = evaluate(points.subspan(i * n, n));
}

std::vector<LoweredPoly::cd> LoweredPoly::univariate_at(int var, std::span<const cd> point) const {
  int deg = 0;
  for (const auto& e : exps_) deg = std::max<int>(deg, e[var]);
  std::vector<cd> out(coeffs_.empty() ? 0 : deg + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    cd c = coeffs_[i];
    for (int v = 0; v < num_vars_; ++v)
      if (v != var) c *= ipow(point[v], exps_[i][v]);
    out[exps_[i][var]] += c;
  }
  return out;
}

}  // namespace pluri
