#include "pluri/pluriharmonic.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "pluri/elimination.hpp"
#include "pluri/error.hpp"
#include "pluri/numeric_roots.hpp"

namespace pluri {

cd PluriharmonicFn::evaluate(std::span<const cd> z) const {
  return cd(g.evaluate(z).real(), 0.0) + f.evaluate(z);
}

PluriharmonicMap::PluriharmonicMap(int n_, std::vector<PluriharmonicFn> funcs_)
    : n(n_), funcs(std::move(funcs_)) {
  validate();
}

void PluriharmonicMap::validate() const {
  if (n < 1 || n > kMaxVars) throw Error(ErrorCode::Structural, "domain dimension out of range");
  if (funcs.empty()) throw Error(ErrorCode::Structural, "a map needs at least one generator");
  for (const auto& h : funcs)
    if (h.g.num_vars() != n || h.f.num_vars() != n)
      throw Error(ErrorCode::Structural, "generator polynomial has the wrong variable count");
}

std::vector<cd> PluriharmonicMap::evaluate(std::span<const cd> z) const {
  std::vector<cd> out;
  out.reserve(funcs.size());
  for (const auto& h : funcs) out.push_back(h.evaluate(z));
  return out;
}

PluriharmonicFn re_part(const HoloPoly& g) { return {g, HoloPoly(g.num_vars())}; }
PluriharmonicFn holomorphic(const HoloPoly& f) { return {HoloPoly(f.num_vars()), f}; }

PolyMatrix dbar_conjugate_reps(const PluriharmonicMap& map) {
  PolyMatrix m;
  m.reserve(map.size());
  for (const auto& h : map.funcs) {
    std::vector<HoloPoly> row;
    for (int k = 0; k < map.n; ++k) row.push_back(h.g.derivative(k));
    m.push_back(std::move(row));
  }
  return m;
}

HoloPoly minor_det(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size() || rows.empty()) throw Error(ErrorCode::Structural, "minor needs a square index set");
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  const int nv = m[rows[0]][cols[0]].num_vars();
  HoloPoly acc(nv);
  std::vector<int> sub(cols.size() - 1);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const HoloPoly& a = m[rows[0]][cols[j]];
    if (a.is_zero()) continue;
    std::size_t t = 0;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != j) sub[t++] = cols[c];
    HoloPoly term = a * minor_det(m, rows.subspan(1), sub);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

namespace {

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<HoloPoly> MinorSystem::nonzero() const {
  std::vector<HoloPoly> out;
  for (const auto& m : minors)
    if (!m.det.is_zero()) out.push_back(m.det);
  return out;
}

MinorSystem minor_system(const PluriharmonicMap& map, int k) {
  map.validate();
  if (k < 1 || k > map.n) throw Error(ErrorCode::Structural, "minor order must lie in 1..n");
  MinorSystem ms;
  ms.k = k;
  ms.n = map.n;
  const int N = static_cast<int>(map.size());
  if (N < k) return ms;
  const PolyMatrix m = dbar_conjugate_reps(map);
  std::vector<std::vector<int>> rs, cs;
  subsets(N, k, rs);
  subsets(map.n, k, cs);
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      Minor mi{r, c, minor_det(m, r, c)};
      if (!mi.det.is_zero()) ms.identically_zero = false;
      ms.minors.push_back(std::move(mi));
    }
  }
  return ms;
}

namespace {

using Mask = std::uint32_t;
using ExtElem = std::map<Mask, HoloPoly>;

// Sign of moving the generators of b past those of a to reach increasing order.
int merge_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask bb = b; bb; bb &= bb - 1) {
    const int bit = std::countr_zero(bb);
    swaps += std::popcount(a >> (bit + 1));
  }
  return swaps % 2 ? -1 : 1;
}

ExtElem wedge(const ExtElem& x, const ExtElem& y, int nv) {
  ExtElem r;
  for (const auto& [ma, ca] : x) {
    for (const auto& [mb, cb] : y) {
      if (ma & mb) continue;
      HoloPoly t = ca * cb;
      if (merge_sign(ma, mb) < 0) t = -t;
      auto [it, ins] = r.try_emplace(ma | mb, HoloPoly(nv));
      it->second += t;
    }
  }
  for (auto it = r.begin(); it != r.end();) {
    if (it->second.is_zero()) it = r.erase(it);
    else ++it;
  }
  return r;
}

}  // namespace

bool wedge_power_check(const PluriharmonicMap& map, int k) {
  map.validate();
  if (k < 1 || k > map.n) throw Error(ErrorCode::Structural, "wedge order must lie in 1..n");
  const int n = map.n, N = static_cast<int>(map.size());
  if (n + N > 31) throw Error(ErrorCode::Structural, "exterior algebra too large");
  const PolyMatrix a = dbar_conjugate_reps(map);

  // generators: bit l = dzbar_l (l < n), bit n + j = e_j
  ExtElem h1;
  for (int j = 0; j < N; ++j) {
    for (int l = 0; l < n; ++l) {
      if (a[j][l].is_zero()) continue;
      const Mask m = (Mask{1} << l) | (Mask{1} << (n + j));
      h1.emplace(m, a[j][l]);  // dzbar_l ^ e_j is already in increasing order
    }
  }
  ExtElem power = h1;
  for (int i = 1; i < k; ++i) power = wedge(power, h1, n);
  GaussianRational inv_fact = 1;
  for (int i = 2; i <= k; ++i) inv_fact /= GaussianRational(i);
  for (auto& [m, c] : power) c *= inv_fact;

  const MinorSystem ms = minor_system(map, k);
  const bool negate = ((k * (k - 1)) / 2) % 2 == 1;
  ExtElem expected;
  for (const auto& mi : ms.minors) {
    if (mi.det.is_zero()) continue;
    Mask m = 0;
    for (int c : mi.cols) m |= Mask{1} << c;
    for (int r : mi.rows) m |= Mask{1} << (n + r);
    expected.emplace(m, negate ? -mi.det : mi.det);
  }
  return power == expected;
}

const char* to_string(Reality r) {
  switch (r) {
    case Reality::TotallyReal: return "totally_real";
    case Reality::NotTotallyReal: return "not_totally_real";
    case Reality::Indeterminate: return "indeterminate";
  }
  return "?";
}

Reality totally_real_at(const MinorSystem& top, std::span<const cd> x, double tol) {
  double best = 0.0;
  for (const auto& m : top.minors) {
    if (m.det.is_zero()) continue;
    best = std::max(best, std::abs(m.det.evaluate(x)));
  }
  if (best > tol) return Reality::TotallyReal;
  return best == 0.0 ? Reality::NotTotallyReal : Reality::Indeterminate;
}

Reality totally_real_at(const PluriharmonicMap& map, std::span<const cd> x, double tol) {
  return totally_real_at(minor_system(map, map.n), x, tol);
}

FaceLocus face_holomorphy_locus(const PluriharmonicMap& map, int frozen_var) {
  map.validate();
  if (map.n != 2) throw Error(ErrorCode::Structural, "face analysis is defined for the bidisk only");
  if (frozen_var != 0 && frozen_var != 1) throw Error(ErrorCode::Structural, "face variable must be 0 or 1");
  const int free_var = 1 - frozen_var;
  FaceLocus out;
  out.frozen_var = frozen_var;
  std::vector<HoloPoly> coeffs;
  for (const auto& h : map.funcs)
    for (auto& c : h.g.derivative(free_var).coefficients_in(free_var))
      if (!c.is_zero()) coeffs.push_back(std::move(c));
  if (coeffs.empty()) {
    out.all = true;
    out.condition = HoloPoly(2);
    return out;
  }
  out.condition = gcd_all(coeffs);
  const UPoly u = to_upoly(out.condition, frozen_var);
  const auto c = u.to_complex();
  for (const cd& r : polynomial_roots(c))
    if (std::abs(std::abs(r) - 1.0) < 1e-9) out.unit_roots.push_back(r);
  std::sort(out.unit_roots.begin(), out.unit_roots.end(),
            [](cd a, cd b) { return std::arg(a) < std::arg(b); });
  return out;
}

namespace {

cd numeric_det(const std::vector<std::vector<cd>>& m, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  cd acc = 0.0;
  std::vector<int> sub(cols.size() - 1);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::size_t t = 0;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != j) sub[t++] = cols[c];
    const cd term = m[rows[0]][cols[j]] * numeric_det(m, rows.subspan(1), sub);
    acc += (j % 2) ? -term : term;
  }
  return acc;
}

}  // namespace

int numeric_rank_at(const PluriharmonicMap& map, std::span<const cd> x, double tol) {
  const PolyMatrix a = dbar_conjugate_reps(map);
  std::vector<std::vector<cd>> m(a.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    for (const auto& e : a[j]) m[j].push_back(e.evaluate(x));
  const int N = static_cast<int>(a.size());
  for (int k = std::min(map.n, N); k >= 1; --k) {
    std::vector<std::vector<int>> rs, cs;
    subsets(N, k, rs);
    subsets(map.n, k, cs);
    for (const auto& r : rs)
      for (const auto& c : cs)
        if (std::abs(numeric_det(m, r, c)) > tol) return k;
  }
  return 0;
}

std::vector<MinorLevel> minor_levels(const PluriharmonicMap& map) {
  std::vector<MinorLevel> out;
  for (int k = std::min<int>(map.n, static_cast<int>(map.size())); k >= 1; --k)
    out.push_back({k, minor_system(map, k)});
  return out;
}

}  // namespace pluri
