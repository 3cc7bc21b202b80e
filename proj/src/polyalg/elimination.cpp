#include "pluri/elimination.hpp"

#include <algorithm>
#include <cmath>

#include "pluri/error.hpp"
#include "pluri/numeric_roots.hpp"
#include "pluri/poly_text.hpp"

namespace pluri {

namespace {

int other_var(const HoloPoly& p, int var) { return p.num_vars() == 2 ? 1 - var : -1; }

int deg(const BiPoly& b) { return static_cast<int>(b.size()) - 1; }

void trim(BiPoly& b) {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
}

UPoly content(const BiPoly& b) {
  UPoly c;
  for (const auto& u : b) {
    c = UPoly::gcd(c, u);
    if (c.degree() == 0) break;
  }
  return c;
}

BiPoly div_coeffs(const BiPoly& b, const UPoly& d) {
  BiPoly r;
  r.reserve(b.size());
  for (const auto& u : b) r.push_back(UPoly::exact_div(u, d));
  return r;
}

BiPoly scale(const BiPoly& b, const UPoly& s) {
  BiPoly r;
  r.reserve(b.size());
  for (const auto& u : b) r.push_back(u * s);
  trim(r);
  return r;
}

BiPoly primitive(const BiPoly& b) {
  if (b.empty()) return b;
  return div_coeffs(b, content(b));
}

// lc(B)^(degA-degB+1) * A mod B
BiPoly prem(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  const int db = deg(b);
  int e = deg(a) - db + 1;
  const UPoly& lb = b.back();
  while (!r.empty() && deg(r) >= db) {
    const int shift = deg(r) - db;
    const UPoly lr = r.back();
    for (auto& u : r) u = u * lb;
    for (int i = 0; i <= db; ++i) r[shift + i] -= lr * b[i];
    r.back() = UPoly();
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) r = scale(r, lb.pow(static_cast<unsigned>(e)));
  return r;
}

// h^(1-delta) g^delta, exact in Q(i)[y]
UPoly next_h(const UPoly& h, const UPoly& g, int delta) {
  if (delta == 0) return h;
  if (delta == 1) return g;
  return UPoly::exact_div(g.pow(delta), h.pow(delta - 1));
}

BiPoly subresultant_gcd(BiPoly a, BiPoly b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  UPoly g = UPoly::constant(1), h = UPoly::constant(1);
  for (;;) {
    const int delta = deg(a) - deg(b);
    BiPoly r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return BiPoly{UPoly::constant(1)};
    a = std::move(b);
    b = div_coeffs(r, g * h.pow(delta));
    g = a.back();
    h = next_h(h, g, delta);
  }
  return primitive(b);
}

HoloPoly pow_or_one(const HoloPoly& p, int e) {
  return e <= 0 ? HoloPoly::constant(p.num_vars(), 1) : p.pow(static_cast<unsigned>(e));
}

}  // namespace

UPoly to_upoly(const HoloPoly& p, int var) {
  std::vector<GaussianRational> c(std::max(0, p.degree_in(var) + 1));
  for (const auto& [e, v] : p.terms()) {
    for (int k = 0; k < p.num_vars(); ++k)
      if (k != var && e[k] != 0) throw Error(ErrorCode::Structural, "polynomial is not univariate");
    c[e[var]] = v;
  }
  return UPoly(std::move(c));
}

HoloPoly from_upoly(const UPoly& u, int num_vars, int var) {
  HoloPoly p(num_vars);
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    Exponent e{};
    if (var >= 0) e[var] = static_cast<std::uint16_t>(k);
    else if (k > 0) throw Error(ErrorCode::Structural, "nonconstant coefficient without a variable");
    p.add_term(e, u.coeffs()[k]);
  }
  return p;
}

BiPoly to_bipoly(const HoloPoly& p, int main_var) {
  const int ov = other_var(p, main_var);
  BiPoly b(std::max(0, p.degree_in(main_var) + 1));
  std::vector<std::vector<GaussianRational>> c(b.size());
  for (const auto& [e, v] : p.terms()) {
    auto& row = c[e[main_var]];
    const int k = ov >= 0 ? e[ov] : 0;
    if (static_cast<int>(row.size()) <= k) row.resize(k + 1);
    row[k] = v;
  }
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = UPoly(std::move(c[i]));
  return b;
}

HoloPoly from_bipoly(const BiPoly& b, int main_var, int num_vars) {
  const int ov = num_vars == 2 ? 1 - main_var : -1;
  HoloPoly p(num_vars);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t k = 0; k < b[i].coeffs().size(); ++k) {
      Exponent e{};
      e[main_var] = static_cast<std::uint16_t>(i);
      if (ov >= 0) e[ov] = static_cast<std::uint16_t>(k);
      p.add_term(e, b[i].coeffs()[k]);
    }
  }
  return p;
}

HoloPoly from_bipoly(const BiPoly& b, int main_var) { return from_bipoly(b, main_var, 2); }

HoloPoly gcd_bivariate(const HoloPoly& p, const HoloPoly& q) {
  if (p.num_vars() != q.num_vars()) throw Error(ErrorCode::Structural, "variable-count mismatch in gcd");
  if (p.num_vars() > 2) throw Error(ErrorCode::Structural, "exact gcd needs at most two variables");
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::UndefinedGcd, "gcd of two zero polynomials");
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  const int nv = p.num_vars();
  if (nv == 1) return from_upoly(UPoly::gcd(to_upoly(p, 0), to_upoly(q, 0)), 1, 0);

  BiPoly a = to_bipoly(p, 0), b = to_bipoly(q, 0);
  const UPoly ca = content(a), cb = content(b);
  const UPoly c = UPoly::gcd(ca, cb);
  a = div_coeffs(a, ca);
  b = div_coeffs(b, cb);
  BiPoly g{UPoly::constant(1)};
  if (deg(a) > 0 && deg(b) > 0) g = subresultant_gcd(std::move(a), std::move(b));
  return from_bipoly(scale(g, c), 0, nv).normalized();
}

HoloPoly gcd_all(const std::vector<HoloPoly>& polys) {
  if (polys.empty()) throw Error(ErrorCode::UndefinedGcd, "gcd of an empty list");
  HoloPoly g(polys.front().num_vars());
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.normalized() : gcd_bivariate(g, p);
    if (g.is_constant()) break;
  }
  if (g.is_zero()) throw Error(ErrorCode::UndefinedGcd, "gcd of zero polynomials");
  return g;
}

HoloPoly square_free_part(const HoloPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "square-free part of the zero polynomial");
  if (p.num_vars() > 2) throw Error(ErrorCode::Structural, "square-free part needs at most two variables");
  if (p.is_constant()) return HoloPoly::constant(p.num_vars(), 1);
  HoloPoly g = p;
  for (int v = 0; v < p.num_vars(); ++v) g = gcd_bivariate(g, p.derivative(v));
  return exact_divide(p, g).normalized();
}

HoloPoly resultant_eliminate(const HoloPoly& p, const HoloPoly& q, int var) {
  if (p.num_vars() != q.num_vars()) throw Error(ErrorCode::Structural, "variable-count mismatch in resultant");
  if (p.num_vars() > 2 || var < 0 || var >= p.num_vars())
    throw Error(ErrorCode::Structural, "resultant needs at most two variables and a valid index");
  const int nv = p.num_vars();
  if (p.is_zero() || q.is_zero()) return HoloPoly(nv);
  const int dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp == 0) return pow_or_one(p, dq);
  if (dq == 0) return pow_or_one(q, dp);

  BiPoly a = to_bipoly(p, var), b = to_bipoly(q, var);
  const UPoly ca = content(a), cb = content(b);
  a = div_coeffs(a, ca);
  b = div_coeffs(b, cb);
  const UPoly t = ca.pow(deg(b)) * cb.pow(deg(a));
  GaussianRational s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if ((deg(a) & 1) && (deg(b) & 1)) s = -1;
  }
  UPoly g = UPoly::constant(1), h = UPoly::constant(1);
  for (;;) {
    const int delta = deg(a) - deg(b);
    if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
    BiPoly r = prem(a, b);
    a = std::move(b);
    b = r.empty() ? BiPoly{} : div_coeffs(r, g * h.pow(delta));
    g = a.back();
    h = next_h(h, g, delta);
    if (deg(b) <= 0) break;
  }
  if (b.empty()) return HoloPoly(nv);
  const int da = deg(a);
  const UPoly hh = UPoly::exact_div(b.back().pow(da), h.pow(da - 1));
  const UPoly res = hh * t * s;
  return from_upoly(res, nv, other_var(p, var));
}

bool divides(const HoloPoly& p, const HoloPoly& b) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "division by the zero polynomial");
  if (b.is_zero()) return true;
  try {
    exact_divide(b, p);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Structural && p.num_vars() == b.num_vars()) return false;
    throw;
  }
}

HoloPoly exact_divide(const HoloPoly& b, const HoloPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "division by the zero polynomial");
  if (p.num_vars() != b.num_vars()) throw Error(ErrorCode::Structural, "variable-count mismatch in division");
  const int nv = p.num_vars();
  const Exponent lp = p.leading_exponent();
  const GaussianRational inv = p.leading_coefficient().inverse();
  HoloPoly r = b, q(nv);
  while (!r.is_zero()) {
    const Exponent lr = r.leading_exponent();
    Exponent d{};
    for (int v = 0; v < kMaxVars; ++v) {
      if (lr[v] < lp[v]) throw Error(ErrorCode::Structural, "polynomial division leaves a remainder");
      d[v] = static_cast<std::uint16_t>(lr[v] - lp[v]);
    }
    const HoloPoly t = HoloPoly::monomial(nv, d, r.leading_coefficient() * inv);
    q += t;
    r -= t * p;
  }
  return q;
}

HoloPoly content_in(const HoloPoly& p, int var) {
  if (p.is_zero()) return p;
  const int nv = p.num_vars();
  if (nv == 1) return HoloPoly::constant(1, 1);
  const BiPoly b = to_bipoly(p, var);
  return from_upoly(content(b), nv, 1 - var);
}

std::vector<GaussianRational> rational_roots(const UPoly& u) {
  std::vector<GaussianRational> out;
  if (u.degree() < 1) return out;
  const UPoly sf = UPoly::exact_div(u, UPoly::gcd(u, u.derivative()));
  const auto c = sf.to_complex();
  for (const auto& z : polynomial_roots(c)) {
    const double tol = 1e-9 * std::max(1.0, std::abs(z));
    auto r = GaussianRational::rationalize(z, 1000000, tol);
    if (!r || !sf.evaluate(*r).is_zero()) continue;
    if (std::find(out.begin(), out.end(), *r) == out.end()) out.push_back(*r);
  }
  return out;
}

namespace {

void split_univariate(const HoloPoly& c, int var, std::vector<HoloPoly>& out) {
  if (c.is_constant()) return;
  UPoly u = to_upoly(c, var);
  const int nv = c.num_vars();
  for (const auto& r : rational_roots(u)) {
    const UPoly lin({-r, GaussianRational(1)});
    while (u.degree() >= 1) {
      UPoly q, rem;
      UPoly::divmod(u, lin, q, rem);
      if (!rem.is_zero()) break;
      u = q;
    }
    out.push_back(from_upoly(lin, nv, var));
  }
  if (u.degree() >= 1) out.push_back(from_upoly(u, nv, var).normalized());
}

}  // namespace

std::vector<HoloPoly> split_available_factors(const HoloPoly& p) {
  std::vector<HoloPoly> out;
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "factors of the zero polynomial");
  if (p.is_constant()) return out;
  const int nv = p.num_vars();
  if (nv == 1) {
    split_univariate(p, 0, out);
  } else if (nv == 2) {
    const HoloPoly c2 = content_in(p, 0);  // free of z1
    const HoloPoly q = exact_divide(p, c2);
    const HoloPoly c1 = content_in(q, 1);  // free of z2
    const HoloPoly r = exact_divide(q, c1);
    split_univariate(c2, 1, out);
    split_univariate(c1, 0, out);
    if (!r.is_constant()) out.push_back(r.normalized());
  } else {
    out.push_back(p.normalized());
  }
  std::sort(out.begin(), out.end(),
            [](const HoloPoly& a, const HoloPoly& b) { return to_text(a) < to_text(b); });
  return out;
}

namespace {

using cd = std::complex<double>;

double residual_scale(const HoloPoly& p, cd x, cd y) {
  const double m = std::max({1.0, std::abs(x), std::abs(y)});
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) s += std::abs(c.to_complex()) * std::pow(m, total_degree(e));
  return std::max(s, 1.0);
}

std::vector<cd> simple_roots(const HoloPoly& r, int var) {
  UPoly u = to_upoly(r, var);
  if (u.degree() < 1) return {};
  u = UPoly::exact_div(u, UPoly::gcd(u, u.derivative()));
  const auto c = u.to_complex();
  return polynomial_roots(c);
}

}  // namespace

std::vector<std::array<cd, 2>> common_zeros(const std::vector<HoloPoly>& polys) {
  std::vector<HoloPoly> ps;
  for (const auto& p : polys)
    if (!p.is_zero()) ps.push_back(p);
  if (ps.empty()) throw Error(ErrorCode::Structural, "common zeros of the zero system");
  if (ps.front().num_vars() != 2) throw Error(ErrorCode::Structural, "common_zeros needs two variables");
  for (const auto& p : ps)
    if (p.is_constant()) return {};
  if (!gcd_all(ps).is_constant()) throw Error(ErrorCode::Structural, "system has a common curve");
  if (ps.size() == 1) return {};

  const HoloPoly& a = ps.front();
  HoloPoly b(2);
  for (long t = 1; t <= 16; ++t) {
    b = HoloPoly(2);
    long c = 1;
    for (std::size_t i = 1; i < ps.size(); ++i, c *= (t + 1)) b += ps[i] * GaussianRational(c);
    if (!b.is_zero() && gcd_bivariate(a, b).is_constant()) break;
    b = HoloPoly(2);
  }
  if (b.is_zero()) throw Error(ErrorCode::Structural, "no coprime combination found");

  const auto xs = simple_roots(resultant_eliminate(a, b, 1), 0);
  const auto ys = simple_roots(resultant_eliminate(a, b, 0), 1);
  const HoloPoly ax = a.derivative(0), ay = a.derivative(1), bx = b.derivative(0), by = b.derivative(1);

  std::vector<std::array<cd, 2>> out;
  for (const cd& x0 : xs) {
    for (const cd& y0 : ys) {
      cd pt[2] = {x0, y0};
      bool ok = true;
      for (const auto& p : ps)
        if (std::abs(p.evaluate(pt)) > 1e-7 * residual_scale(p, x0, y0)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int it = 0; it < 6; ++it) {
        const cd fa = a.evaluate(pt), fb = b.evaluate(pt);
        const cd j11 = ax.evaluate(pt), j12 = ay.evaluate(pt), j21 = bx.evaluate(pt), j22 = by.evaluate(pt);
        const cd det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-10) break;
        const cd dx = (fa * j22 - fb * j12) / det, dy = (j11 * fb - j21 * fa) / det;
        cd np[2] = {pt[0] - dx, pt[1] - dy};
        if (std::abs(a.evaluate(np)) + std::abs(b.evaluate(np)) > std::abs(fa) + std::abs(fb)) break;
        pt[0] = np[0];
        pt[1] = np[1];
      }
      bool dup = false;
      for (const auto& q : out)
        if (std::abs(q[0] - pt[0]) < 1e-8 && std::abs(q[1] - pt[1]) < 1e-8) dup = true;
      if (!dup) out.push_back({pt[0], pt[1]});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) {
    for (int k = 0; k < 2; ++k) {
      if (u[k].real() != v[k].real()) return u[k].real() < v[k].real();
      if (u[k].imag() != v[k].imag()) return u[k].imag() < v[k].imag();
    }
    return false;
  });
  return out;
}

}  // namespace pluri
