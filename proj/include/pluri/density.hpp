#pragma once
// Empirical density experiments: deterministic sample grids, monomial bases
// in the coordinates and the generators, least-squares residuals across
// degrees, and separation certificates for points off the graph.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pluri/pluriharmonic.hpp"

namespace pluri {

using cd = std::complex<double>;

enum class DomainKind { ClosedBidisk, Torus2, ClosedDisk, FiberDisk, Face };

struct SampleDomain {
  DomainKind kind = DomainKind::ClosedBidisk;
  int resolution = 32;
  cd a = 0.0;        // FiberDisk: z1 = a; Face: z_{face_var} = a
  int face_var = 0;

  int num_vars() const { return kind == DomainKind::ClosedDisk ? 1 : 2; }
  SampleDomain doubled() const;
  // Closed-domain membership with slack 1e-12.
  bool contains(std::span<const cd> z) const;
};

std::string to_string(DomainKind k);
std::string describe(const SampleDomain& d);

struct PointSet {
  int dim = 2;
  std::vector<cd> coords;  // dim consecutive coordinates per point

  std::size_t size() const { return dim ? coords.size() / dim : 0; }
  std::span<const cd> point(std::size_t i) const { return {coords.data() + i * dim, static_cast<std::size_t>(dim)}; }
};

// Polar disk grids use `resolution` angles and max(2, resolution/8) rings at
// radii sin(pi i / 2R), i = 1..R, plus the center; the bidisk uses the
// product of disk grids with max(2, resolution/32) rings; the torus is the
// product of equispaced angle grids.
PointSet sample_domain(const SampleDomain& d);
// Twice as many angles and rings; contains the training grid.
PointSet validation_grid(const SampleDomain& d);

struct BasisMonomial {
  std::vector<std::uint8_t> powers;  // z_1..z_n then h_1..h_N
  int symbol = -1;                   // last factor; removing it gives the parent monomial
  int degree = 0;
};

struct Basis {
  int n = 2;
  int num_generators = 0;
  std::vector<BasisMonomial> monomials;  // graded, so lower degrees form a prefix
  std::vector<std::size_t> degree_end;   // monomials of degree <= k occupy [0, degree_end[k])

  std::size_t size() const { return monomials.size(); }
  std::string label(std::size_t i) const;
};

inline constexpr std::size_t kDefaultBasisCap = 5000;

// All monomials of total degree <= d in z_1..z_n, h_1..h_N. Monomials that
// involve only holomorphic generators expand to polynomials in z; those
// equal to an earlier one up to a scalar are dropped.
Basis generator_basis(const PluriharmonicMap& map, int degree, std::size_t cap = kDefaultBasisCap);

// Column-major values of the first `count` basis functions at the points.
std::vector<cd> evaluate_basis(const PluriharmonicMap& map, const Basis& basis, std::size_t count,
                               const PointSet& pts);

struct Target {
  std::string id;
  std::function<cd(std::span<const cd>)> f;
};

// conj_z1, conj_z2, abs2_z1_conj_z2, bump, z<k>, h<j>, conj_h<j>
Target make_target(const std::string& id, const PluriharmonicMap& map);
std::vector<std::string> standard_battery(int n);

struct FitResult {
  double train_residual = 0.0;  // root-mean-square residual on the training grid
  double sup_residual = 0.0;    // max residual on the validation grid
  int rank = 0;
};

// Least-squares fits of every target by the first `count` basis functions.
// Columns are normalized; the triangular factor from a Householder QR is
// solved with a complete orthogonal decomposition at relative threshold 1e-10.
std::vector<FitResult> fit_residuals(const PluriharmonicMap& map, const Basis& basis, std::size_t count,
                                     std::span<const Target> targets, const PointSet& train,
                                     const PointSet& validate);
FitResult fit_residual(const PluriharmonicMap& map, const Basis& basis, std::size_t count, const Target& target,
                       const PointSet& train, const PointSet& validate);

struct DensityReport {
  std::string generators;
  SampleDomain domain;
  std::vector<std::string> targets;
  std::vector<int> degrees;
  std::vector<std::size_t> basis_sizes;
  std::vector<int> ranks;
  std::size_t train_points = 0, validate_points = 0;
  std::vector<std::vector<double>> train_residuals;  // [target][degree]
  std::vector<std::vector<double>> sup_residuals;
  std::vector<std::vector<double>> sup_residuals_doubled;
  std::vector<std::vector<double>> stability;        // |sup - sup_doubled| / max(sup, sup_doubled, 1e-12)
  bool has_stability = false;

  std::string to_csv() const;
};

DensityReport decay_report(const PluriharmonicMap& map, const SampleDomain& domain,
                           const std::vector<std::string>& targets, const std::vector<int>& degrees,
                           bool with_stability = true, std::size_t cap = kDefaultBasisCap);

struct SeparationCertificate {
  int generator = 0;  // 0-based j
  double theta = 0.0;
  double value_at_query = 0.0;
  double graph_max = 0.0;
  double margin = 0.0;

  // Re(e^{i theta}(w_j - h_j(z)))
  double evaluate(const PluriharmonicMap& map, std::span<const cd> z, std::span<const cd> w) const;
};

enum class CertificateStatus { Certified, OnGraph, NoSeparation, OutsideDomain };
const char* to_string(CertificateStatus s);

struct CertificateOutcome {
  CertificateStatus status = CertificateStatus::NoSeparation;
  std::optional<SeparationCertificate> certificate;
};

// Query (z0, w0) with z0 in C^n and w0 in C^N; graph_samples are points of the domain.
CertificateOutcome separation_certificate(const PluriharmonicMap& map, const SampleDomain& domain,
                                          std::span<const cd> z0, std::span<const cd> w0,
                                          const PointSet& graph_samples);

}  // namespace pluri
