#pragma once
// Generators h = Re(g) + f with polynomial g, f, their anti-holomorphic
// Jacobian and its minors.
//
// Stored data never carries the factor 1/2 or the conjugation: entry (j,k)
// of the Jacobian representative is dg_j/dz_k, and the true derivative is
//   dh_j/dzbar_k (z) = 1/2 * conj(entry(j,k)(z)).
// A k x k minor B therefore stands for 2^-k conj(B(z)), which vanishes
// exactly where B does.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pluri/holo_poly.hpp"

namespace pluri {

using cd = std::complex<double>;

struct PluriharmonicFn {
  HoloPoly g;  // real-part source
  HoloPoly f;  // holomorphic part

  bool is_holomorphic() const { return g.is_constant(); }
  cd evaluate(std::span<const cd> z) const;
};

struct PluriharmonicMap {
  int n = 2;
  std::vector<PluriharmonicFn> funcs;

  PluriharmonicMap() = default;
  PluriharmonicMap(int n, std::vector<PluriharmonicFn> funcs);
  // Checks N >= 1 and that every polynomial lives in n variables.
  void validate() const;
  std::size_t size() const { return funcs.size(); }
  std::vector<cd> evaluate(std::span<const cd> z) const;
};

// Shorthand for h = Re(g) with no holomorphic part.
PluriharmonicFn re_part(const HoloPoly& g);
PluriharmonicFn holomorphic(const HoloPoly& f);

using PolyMatrix = std::vector<std::vector<HoloPoly>>;

// N x n matrix with entry (j,k) = dg_j/dz_k.
PolyMatrix dbar_conjugate_reps(const PluriharmonicMap& map);

// Determinant of the submatrix with the given rows and columns, in the given
// order (so swapping two rows flips the sign).
HoloPoly minor_det(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols);

struct Minor {
  std::vector<int> rows;  // increasing generator indices I
  std::vector<int> cols;  // increasing coordinate indices J
  HoloPoly det;           // exact determinant, not rescaled

  // Leading coefficient scaled to 1 (same zero set as det).
  HoloPoly representative() const { return det.normalized(); }
};

struct MinorSystem {
  int k = 0;
  int n = 0;
  std::vector<Minor> minors;      // ordered lexicographically by (rows, cols)
  bool identically_zero = true;   // every minor is the zero polynomial (or there are none)

  std::vector<HoloPoly> nonzero() const;
};

// All k x k minors. With k == n the columns are always 0..n-1; with k < n
// every increasing column subset is listed. N < k yields an empty system
// flagged identically zero. Throws Structural when k > n or k < 1.
MinorSystem minor_system(const PluriharmonicMap& map, int k);

// Brute-force expansion of (H_1)^k / k! in the exterior algebra generated
// by dzbar_1..dzbar_n, e_1..e_N with H_1 = sum a_{jl} dzbar_l ^ e_j, compared
// coefficient by coefficient with (-1)^{k(k-1)/2} det_{I,J} on dzbar_J ^ e_I.
bool wedge_power_check(const PluriharmonicMap& map, int k);

enum class Reality { TotallyReal, NotTotallyReal, Indeterminate };
const char* to_string(Reality r);

// Numeric graph test at x using the n x n minors: some |B(x)| > tol gives
// TotallyReal, all exactly zero gives NotTotallyReal, otherwise Indeterminate.
Reality totally_real_at(const PluriharmonicMap& map, std::span<const cd> x, double tol = 1e-8);
Reality totally_real_at(const MinorSystem& top, std::span<const cd> x, double tol = 1e-8);

struct FaceLocus {
  int frozen_var = 0;          // 0: faces {z1 = a}, 1: faces {z2 = a}
  bool all = false;            // every face is holomorphic for every generator
  HoloPoly condition{2};       // gcd of the coefficient polynomials, in z_frozen
  std::vector<cd> unit_roots;  // roots of condition with ||a| - 1| < 1e-9

  bool nonempty() const { return all || !unit_roots.empty(); }
};

// Faces {z_frozen = a}, |a| = 1, on which every h_j is holomorphic.
FaceLocus face_holomorphy_locus(const PluriharmonicMap& map, int frozen_var);

// Rank of the numeric Jacobian representative at x: the largest k with some
// k x k minor of modulus > tol. Used as the classification skeleton for n > 2.
int numeric_rank_at(const PluriharmonicMap& map, std::span<const cd> x, double tol = 1e-8);

struct MinorLevel {
  int k;
  MinorSystem minors;
};
// Minor systems for k = min(n, N) down to 1.
std::vector<MinorLevel> minor_levels(const PluriharmonicMap& map);

}  // namespace pluri
