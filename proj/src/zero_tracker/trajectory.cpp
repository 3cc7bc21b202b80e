#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "pluri/error.hpp"
#include "pluri/zero_tracker.hpp"

namespace pluri {

std::vector<double> linear_grid(double a, double b, int count) {
  if (count < 2) return {a};
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = a + (b - a) * static_cast<double>(i) / (count - 1);
  return g;
}

std::vector<double> ZeroTrajectory::branching_points() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < branching.size(); ++i)
    if (branching[i]) out.push_back(t_grid[i]);
  return out;
}

namespace {

bool lex_less(cd a, cd b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); }

// Reorders cur to minimize the summed distance to prev. Exhaustive for small
// m; permutations are visited in lexicographic order so ties keep the first.
void match(const std::vector<cd>& prev, std::vector<cd>& cur) {
  const std::size_t m = cur.size();
  if (m != prev.size() || m < 2) return;
  std::sort(cur.begin(), cur.end(), lex_less);
  if (m > 8) {
    std::vector<cd> out(m);
    std::vector<bool> used(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t best = m;
      for (std::size_t j = 0; j < m; ++j)
        if (!used[j] && (best == m || std::abs(cur[j] - prev[i]) < std::abs(cur[best] - prev[i]))) best = j;
      used[best] = true;
      out[i] = cur[best];
    }
    cur = out;
    return;
  }
  std::vector<std::size_t> perm(m), best;
  std::iota(perm.begin(), perm.end(), 0);
  double best_cost = INFINITY;
  do {
    double c = 0.0;
    for (std::size_t i = 0; i < m; ++i) c += std::abs(cur[perm[i]] - prev[i]);
    if (c < best_cost - 1e-15) {
      best_cost = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<cd> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = cur[best[i]];
  cur = out;
}

cd pair_discriminant(const std::vector<cd>& p, const std::vector<cd>& zeros, bool& heuristic) {
  if (p.size() == 2) return 2.0 * p[1] - p[0] * p[0];
  if (zeros.size() < 2) return 1.0;
  heuristic = true;
  cd d = 1.0;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j) d *= (zeros[i] - zeros[j]) * (zeros[i] - zeros[j]);
  return d;
}

ZeroTrajectory run(const ParamFunction& g, const Contour& c, std::span<const double> t_grid, bool exact_pair) {
  if (t_grid.empty()) throw Error(ErrorCode::Structural, "empty parameter grid");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1])) throw Error(ErrorCode::Structural, "parameter grid must increase");
  ZeroTrajectory tr;
  tr.t_grid.assign(t_grid.begin(), t_grid.end());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    const int m = winding_count(g, t, c);
    if (exact_pair && m != 2)
      throw Error(ErrorCode::UnsupportedMultiplicity,
                  "pair mode needs exactly two zeros, found " + std::to_string(m) + " at t = " + std::to_string(t));
    tr.counts.push_back(m);
    auto p = zero_moments(g, t, c, m);
    std::vector<cd> z;
    bool flagged = false;
    if (m > 0) {
      auto rec = recover_zeros(p);
      z = rec.zeros;
      flagged = rec.flagged;
      const double scale = std::max(1.0, std::abs(g.value(c.center, t)));
      for (const cd& a : z)
        if (std::abs(g.value(a, t)) >= 1e-6 * scale) flagged = true;
    }
    if (i > 0 && tr.counts[i - 1] == m) match(tr.zeros.back(), z);
    tr.discriminant.push_back(pair_discriminant(p, z, tr.heuristic));
    tr.moments.push_back(std::move(p));
    tr.zeros.push_back(std::move(z));
    tr.recovery_flagged.push_back(flagged);
  }

  // K is the boundary of {|D| < 1e-6} relative to the grid, plus the grid
  // point nearest a phase reversal of D between two nonvanishing samples.
  const std::size_t n = t_grid.size();
  std::vector<bool> in_zero(n);
  for (std::size_t i = 0; i < n; ++i) in_zero[i] = std::abs(tr.discriminant[i]) < 1e-6;
  tr.branching.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_zero[i]) continue;
    if ((i > 0 && !in_zero[i - 1]) || (i + 1 < n && !in_zero[i + 1])) tr.branching[i] = true;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (in_zero[i] || in_zero[i + 1] || tr.counts[i] != tr.counts[i + 1]) continue;
    const cd a = tr.discriminant[i], b = tr.discriminant[i + 1];
    if (std::real(a * std::conj(b)) < 0.0) tr.branching[std::abs(a) <= std::abs(b) ? i : i + 1] = true;
  }

  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || tr.counts[i] != tr.counts[start]) {
      tr.segments.emplace_back(start, i);
      start = i;
    }
  }
  return tr;
}

}  // namespace

ZeroTrajectory branching_set(const ParamFunction& g, const Contour& c, std::span<const double> t_grid,
                             bool exact_pair) {
  return run(g, c, t_grid, exact_pair);
}

ZeroTrajectory track_zeros(const ParamFunction& g, const Contour& c, std::span<const double> t_grid) {
  return run(g, c, t_grid, false);
}

std::string trajectory_csv(const ZeroTrajectory& tr) {
  std::size_t width = 0;
  for (const auto& z : tr.zeros) width = std::max(width, z.size());
  std::ostringstream os;
  os.precision(17);
  os << "t,count";
  for (std::size_t j = 1; j <= width; ++j) os << ",re_a" << j << ",im_a" << j;
  os << ",branching\n";
  for (std::size_t i = 0; i < tr.t_grid.size(); ++i) {
    os << tr.t_grid[i] << ',' << tr.counts[i];
    for (std::size_t j = 0; j < width; ++j) {
      if (j < tr.zeros[i].size()) os << ',' << tr.zeros[i][j].real() << ',' << tr.zeros[i][j].imag();
      else os << ",,";
    }
    os << ',' << (tr.branching[i] ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace pluri
