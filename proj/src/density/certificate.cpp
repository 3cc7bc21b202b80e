#include <cmath>
#include <numbers>

#include "pluri/density.hpp"
#include "pluri/error.hpp"

namespace pluri {

namespace {

constexpr int kPhaseGrid = 64;

double objective(cd v, double theta) { return (std::polar(1.0, theta) * v).real(); }

// Golden-section maximization on [a, b].
double golden_max(cd v, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = objective(v, x1), f2 = objective(v, x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = objective(v, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = objective(v, x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

const char* to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Certified: return "certified";
    case CertificateStatus::OnGraph: return "on_graph";
    case CertificateStatus::NoSeparation: return "no_separation";
    case CertificateStatus::OutsideDomain: return "outside_domain";
  }
  return "?";
}

double SeparationCertificate::evaluate(const PluriharmonicMap& map, std::span<const cd> z,
                                       std::span<const cd> w) const {
  return objective(w[generator] - map.funcs[generator].evaluate(z), theta);
}

CertificateOutcome separation_certificate(const PluriharmonicMap& map, const SampleDomain& domain,
                                          std::span<const cd> z0, std::span<const cd> w0,
                                          const PointSet& graph_samples) {
  map.validate();
  if (static_cast<int>(z0.size()) != map.n || w0.size() != map.size())
    throw Error(ErrorCode::Structural, "query has the wrong shape");
  CertificateOutcome out;
  if (!domain.contains(z0)) {
    out.status = CertificateStatus::OutsideDomain;
    return out;
  }
  const auto h0 = map.evaluate(z0);
  double dist = 0.0;
  for (std::size_t j = 0; j < h0.size(); ++j) dist = std::max(dist, std::abs(w0[j] - h0[j]));
  if (dist <= 1e-10) {
    out.status = CertificateStatus::OnGraph;
    return out;
  }

  SeparationCertificate best;
  best.value_at_query = -INFINITY;
  const double step = 2.0 * std::numbers::pi / kPhaseGrid;
  for (std::size_t j = 0; j < map.size(); ++j) {
    const cd v = w0[j] - h0[j];
    int arg = 0;
    for (int k = 1; k < kPhaseGrid; ++k)
      if (objective(v, -std::numbers::pi + k * step) > objective(v, -std::numbers::pi + arg * step)) arg = k;
    const double c = -std::numbers::pi + arg * step;
    const double theta = golden_max(v, c - step, c + step);
    const double val = objective(v, theta);
    if (val > best.value_at_query) {
      best.generator = static_cast<int>(j);
      best.theta = std::remainder(theta, 2.0 * std::numbers::pi);
      best.value_at_query = val;
    }
  }

  best.graph_max = -INFINITY;
  std::vector<cd> w(map.size());
  for (std::size_t i = 0; i < graph_samples.size(); ++i) {
    const auto z = graph_samples.point(i);
    const auto h = map.evaluate(z);
    best.graph_max = std::max(best.graph_max, best.evaluate(map, z, h));
  }
  if (graph_samples.size() == 0) best.graph_max = 0.0;
  best.margin = best.value_at_query - best.graph_max;
  if (best.margin > 1e-8) {
    out.status = CertificateStatus::Certified;
    out.certificate = best;
  }
  return out;
}

}  // namespace pluri
