#include <cctype>
#include <cmath>
#include <optional>
#include <map>

#include "pluri/density.hpp"
#include "pluri/error.hpp"
#include "pluri/kernels.hpp"
#include "pluri/lowered_poly.hpp"
#include "pluri/poly_text.hpp"

namespace pluri {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r > 1e18 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(std::llround(r));
}

}  // namespace

std::string Basis::label(std::size_t i) const {
  const auto& m = monomials.at(i);
  std::string s;
  for (std::size_t k = 0; k < m.powers.size(); ++k) {
    if (!m.powers[k]) continue;
    if (!s.empty()) s += '*';
    s += static_cast<int>(k) < n ? "z" + std::to_string(k + 1) : "h" + std::to_string(k - n + 1);
    if (m.powers[k] > 1) s += "^" + std::to_string(m.powers[k]);
  }
  return s.empty() ? "1" : s;
}

Basis generator_basis(const PluriharmonicMap& map, int degree, std::size_t cap) {
  map.validate();
  if (degree < 0) throw Error(ErrorCode::Structural, "basis degree must be non-negative");
  const int n = map.n, N = static_cast<int>(map.size()), S = n + N;
  const std::size_t full = binomial(static_cast<std::size_t>(S + degree), static_cast<std::size_t>(degree));
  if (full > 20 * cap)
    throw Error(ErrorCode::BasisSize, "basis of degree " + std::to_string(degree) + " has " + std::to_string(full) +
                                          " monomials, cap is " + std::to_string(cap));

  // Symbol polynomials for the symbolic duplicate check: coordinates and
  // holomorphic generators (h = f + Re(constant g)).
  std::vector<std::optional<HoloPoly>> sym(S);
  for (int k = 0; k < n; ++k) sym[k] = HoloPoly::variable(n, k);
  for (int j = 0; j < N; ++j) {
    const auto& h = map.funcs[j];
    if (!h.is_holomorphic()) continue;
    sym[n + j] = h.f + HoloPoly::constant(n, GaussianRational(h.g.constant_term().re()));
  }

  // The chain holds every multiset; inactive entries are kept only as parents.
  struct Entry {
    BasisMonomial m;
    std::optional<HoloPoly> expanded;
    bool active;
  };
  std::vector<Entry> chain;
  std::map<std::string, int> seen;
  chain.push_back({{std::vector<std::uint8_t>(S, 0), -1, 0}, HoloPoly::constant(n, 1), true});
  seen[to_text(HoloPoly::constant(n, 1))] = 0;
  std::size_t level_begin = 0;
  for (int d = 1; d <= degree; ++d) {
    const std::size_t level_end = chain.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      const int first = std::max(0, chain[p].m.symbol);
      for (int s = first; s < S; ++s) {
        Entry e;
        e.m.powers = chain[p].m.powers;
        ++e.m.powers[s];
        e.m.symbol = s;
        e.m.degree = d;
        e.active = true;
        if (chain[p].expanded && sym[s]) {
          e.expanded = *chain[p].expanded * *sym[s];
          if (e.expanded->is_zero()) {
            e.active = false;
          } else {
            const std::string key = to_text(e.expanded->normalized());
            if (seen.count(key)) e.active = false;
            else seen[key] = 1;
          }
        }
        chain.push_back(std::move(e));
      }
    }
    level_begin = level_end;
  }

  Basis b;
  b.n = n;
  b.num_generators = N;
  b.degree_end.assign(degree + 1, 0);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].active) continue;
    b.monomials.push_back(chain[i].m);
    for (int d = chain[i].m.degree; d <= degree; ++d) b.degree_end[d] = b.monomials.size();
  }
  if (b.monomials.size() > cap)
    throw Error(ErrorCode::BasisSize, "basis of degree " + std::to_string(degree) + " has " +
                                          std::to_string(b.monomials.size()) + " functions, cap is " +
                                          std::to_string(cap));
  return b;
}

std::vector<cd> evaluate_basis(const PluriharmonicMap& map, const Basis& basis, std::size_t count,
                               const PointSet& pts) {
  if (count > basis.size()) throw Error(ErrorCode::Structural, "basis prefix longer than the basis");
  if (pts.dim != map.n) throw Error(ErrorCode::Structural, "points and map disagree on dimension");
  const std::size_t m = pts.size();
  const int n = basis.n, S = n + basis.num_generators;

  std::vector<std::vector<cd>> sym(S, std::vector<cd>(m));
  for (int k = 0; k < n; ++k)
    for (std::size_t i = 0; i < m; ++i) sym[k][i] = pts.coords[i * n + k];
  for (int j = 0; j < basis.num_generators; ++j) {
    const LoweredPoly g(map.funcs[j].g), f(map.funcs[j].f);
    for (std::size_t i = 0; i < m; ++i) {
      const auto z = pts.point(i);
      sym[n + j][i] = cd(g.evaluate(z).real(), 0.0) + f.evaluate(z);
    }
  }

  // Columns are built as parent column times symbol column. A parent that was
  // dropped as a duplicate is rebuilt into scratch storage by peeling symbols.
  std::vector<cd> out(m * count);
  std::map<std::vector<std::uint8_t>, std::size_t> index;
  for (std::size_t c = 0; c < count; ++c) index[basis.monomials[c].powers] = c;
  std::map<std::vector<std::uint8_t>, std::vector<cd>> scratch;

  auto column = [&](auto&& self, const std::vector<std::uint8_t>& pw) -> const cd* {
    auto it = index.find(pw);
    if (it != index.end()) return out.data() + it->second * m;  // lower degree, already filled
    auto sc = scratch.find(pw);
    if (sc != scratch.end()) return sc->second.data();
    int s = S - 1;
    while (s >= 0 && pw[s] == 0) --s;
    std::vector<cd> col(m);
    if (s < 0) {
      std::fill(col.begin(), col.end(), cd(1.0));
    } else {
      auto parent = pw;
      --parent[s];
      const cd* pc = self(self, parent);
      kernels::cmul({pc, m}, sym[s], col);
    }
    return scratch.emplace(pw, std::move(col)).first->second.data();
  };

  for (std::size_t c = 0; c < count; ++c) {
    const auto& mono = basis.monomials[c];
    cd* dst = out.data() + c * m;
    if (mono.degree == 0) {
      std::fill(dst, dst + m, cd(1.0));
      continue;
    }
    auto parent = mono.powers;
    --parent[mono.symbol];
    const cd* pc = column(column, parent);
    kernels::cmul({pc, m}, sym[mono.symbol], {dst, m});
  }
  return out;
}

std::vector<std::string> standard_battery(int n) {
  if (n == 1) return {"conj_z1", "bump"};
  return {"conj_z1", "conj_z2", "abs2_z1_conj_z2", "bump"};
}

Target make_target(const std::string& id, const PluriharmonicMap& map) {
  const int n = map.n;
  auto index_after = [&](const std::string& prefix) -> int {
    if (id.rfind(prefix, 0) != 0 || id.size() == prefix.size()) return -1;
    for (std::size_t i = prefix.size(); i < id.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(id[i]))) return -1;
    return std::stoi(id.substr(prefix.size())) - 1;
  };
  if (int k = index_after("conj_z"); k >= 0) {
    if (k >= n) throw Error(ErrorCode::Structural, "target " + id + " needs more coordinates");
    return {id, [k](std::span<const cd> z) { return std::conj(z[k]); }};
  }
  if (int k = index_after("z"); k >= 0) {
    if (k >= n) throw Error(ErrorCode::Structural, "target " + id + " needs more coordinates");
    return {id, [k](std::span<const cd> z) { return z[k]; }};
  }
  if (int j = index_after("conj_h"); j >= 0) {
    if (j >= static_cast<int>(map.size())) throw Error(ErrorCode::Structural, "target " + id + " names no generator");
    const auto h = map.funcs[j];
    return {id, [h](std::span<const cd> z) { return std::conj(h.evaluate(z)); }};
  }
  if (int j = index_after("h"); j >= 0) {
    if (j >= static_cast<int>(map.size())) throw Error(ErrorCode::Structural, "target " + id + " names no generator");
    const auto h = map.funcs[j];
    return {id, [h](std::span<const cd> z) { return h.evaluate(z); }};
  }
  if (id == "abs2_z1_conj_z2") {
    if (n < 2) throw Error(ErrorCode::Structural, "target " + id + " needs two coordinates");
    return {id, [](std::span<const cd> z) { return std::norm(z[0]) * std::conj(z[1]); }};
  }
  if (id == "bump") {
    const cd c0(0.25, 0.0), c1(-0.2, 0.0);
    return {id, [n, c0, c1](std::span<const cd> z) {
              double r2 = std::norm(z[0] - c0);
              if (n > 1) r2 += std::norm(z[1] - c1);
              return cd(std::exp(-4.0 * r2), 0.0);
            }};
  }
  throw Error(ErrorCode::Structural, "unknown target '" + id + "'");
}

}  // namespace pluri
