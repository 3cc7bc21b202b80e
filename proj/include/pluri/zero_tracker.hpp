#pragma once
// Argument-principle zero tracking for functions g(z, t) holomorphic in z.
// Winding counts and power sums come from trapezoidal quadrature on circles
// with node doubling; zeros are recovered from power sums with Newton's
// identities and a companion-matrix solve.

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pluri/holo_poly.hpp"
#include "pluri/lowered_poly.hpp"
#include "pluri/pluriharmonic.hpp"

namespace pluri {

using cd = std::complex<double>;

class ParamFunction {
 public:
  using Fn = std::function<cd(cd z, double t)>;

  // p(z, t) with z = z1 and t = z2 (t substituted as a real number). A
  // one-variable p is t-independent. The z-derivative is symbolic.
  static ParamFunction from_poly(const HoloPoly& p);
  // Without dz, the z-derivative uses 4th-order central differences with
  // step 1e-5 * contour radius.
  static ParamFunction from_callable(Fn f, Fn dz = nullptr);

  cd value(cd z, double t) const;
  cd derivative(cd z, double t, double radius) const;
  bool has_symbolic_derivative() const { return static_cast<bool>(dz_); }

 private:
  Fn f_;
  Fn dz_;
};

struct Contour {
  cd center = 0.0;
  double radius = 1.0;
  int nodes = 64;  // starting node count, power of two, >= 64

  void validate() const;
};

int winding_count(const ParamFunction& g, double t, const Contour& c);
// p_k = (1/2 pi i) \oint z^k g'/g dz for k = 1..m
std::vector<cd> zero_moments(const ParamFunction& g, double t, const Contour& c, int m);

struct RecoveredZeros {
  std::vector<cd> zeros;  // sorted by (re, im)
  double residual = 0.0;  // max |monic(a_j)|
  bool flagged = false;   // residual above 1e-6
};

// e_1..e_m from p_1..p_m
std::vector<cd> elementary_from_power_sums(std::span<const cd> p);
RecoveredZeros recover_zeros(std::span<const cd> power_sums);

struct ZeroTrajectory {
  std::vector<double> t_grid;
  std::vector<int> counts;
  std::vector<std::vector<cd>> moments;  // p_1..p_m per t
  std::vector<std::vector<cd>> zeros;    // matched across t
  std::vector<cd> discriminant;          // 2 p2 - p1^2 when m == 2, product of squared differences otherwise
  std::vector<bool> branching;           // flagged t-values (near K)
  std::vector<bool> recovery_flagged;
  std::vector<std::pair<std::size_t, std::size_t>> segments;  // [begin, end) runs of constant count
  bool heuristic = false;                // general-m discriminant in use

  std::vector<double> branching_points() const;
};

// Tracks zeros across t_grid. With exact_pair, every count must equal 2
// (else UnsupportedMultiplicity).
ZeroTrajectory branching_set(const ParamFunction& g, const Contour& c, std::span<const double> t_grid,
                             bool exact_pair = true);
ZeroTrajectory track_zeros(const ParamFunction& g, const Contour& c, std::span<const double> t_grid);

// Columns t, count, re_1, im_1, ..., branching; rows padded to the largest count.
std::string trajectory_csv(const ZeroTrajectory& tr);

// Evenly spaced grid including both endpoints.
std::vector<double> linear_grid(double a, double b, int count);

struct CoverPoint {
  cd z;
  double s;
  int arc;
};

struct CoverBox {
  double re, im, s;   // center
  double half_width;  // same in all three directions; s is periodic mod 2 pi
};

struct BoundaryCover {
  int frozen_var = 0;
  double delta = 0.0;
  double collar_radius = 0.0;  // U_0 = {|z| > collar_radius}
  struct Arc {
    double s0, s1;
    int generator;
  };
  std::vector<Arc> arcs;
  std::vector<CoverPoint> e_samples;
  std::vector<CoverPoint> b_samples;
  bool b_approximate = true;
  std::vector<CoverBox> boxes;  // U_1.. in order
  std::vector<std::string> notes;

  // 0 for the collar, i >= 1 for box i, -1 if uncovered. The sets are
  // U_i = box_i minus the closures of U_0 .. U_{i-1}.
  int locate(cd z, double s) const;
  bool in_closure(int set, cd z, double s) const;
};

// Zero structure of g_j(z, s) = dg_j/dz_free at (z_frozen = e^{is}, z_free = z).
BoundaryCover boundary_zero_cover(const PluriharmonicMap& map, int frozen_var, int arc_count, double delta);

}  // namespace pluri
