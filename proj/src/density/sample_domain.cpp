#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pluri/density.hpp"
#include "pluri/error.hpp"

namespace pluri {

namespace {

constexpr double kSlack = 1e-12;

std::vector<cd> disk_grid(int angles, int rings) {
  std::vector<cd> pts{cd(0.0)};
  for (int i = 1; i <= rings; ++i) {
    const double r = i == rings ? 1.0 : std::sin(std::numbers::pi * i / (2.0 * rings));
    for (int k = 0; k < angles; ++k) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * k / angles));
  }
  return pts;
}

std::vector<cd> circle_grid(int angles) {
  std::vector<cd> pts;
  for (int k = 0; k < angles; ++k) pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / angles));
  return pts;
}

PointSet product(const std::vector<cd>& a, const std::vector<cd>& b) {
  PointSet ps;
  ps.dim = 2;
  ps.coords.reserve(2 * a.size() * b.size());
  for (const cd& x : a)
    for (const cd& y : b) {
      ps.coords.push_back(x);
      ps.coords.push_back(y);
    }
  return ps;
}

PointSet build(const SampleDomain& d, int scale) {
  if (d.resolution < 8) throw Error(ErrorCode::Structural, "sample resolution must be at least 8");
  const int k = d.resolution;
  const int disk_rings = std::max(2, k / 8);
  switch (d.kind) {
    case DomainKind::Torus2: {
      const auto c = circle_grid(k * scale);
      return product(c, c);
    }
    case DomainKind::ClosedBidisk: {
      const auto g = disk_grid(k * scale, std::max(2, k / 32) * scale);
      return product(g, g);
    }
    case DomainKind::ClosedDisk: {
      PointSet ps;
      ps.dim = 1;
      ps.coords = disk_grid(k * scale, disk_rings * scale);
      return ps;
    }
    case DomainKind::FiberDisk:
      return product({d.a}, disk_grid(k * scale, disk_rings * scale));
    case DomainKind::Face: {
      const auto g = disk_grid(k * scale, disk_rings * scale);
      return d.face_var == 0 ? product({d.a}, g) : product(g, {d.a});
    }
  }
  throw Error(ErrorCode::Structural, "unknown domain kind");
}

}  // namespace

SampleDomain SampleDomain::doubled() const {
  SampleDomain d = *this;
  d.resolution *= 2;
  return d;
}

bool SampleDomain::contains(std::span<const cd> z) const {
  if (static_cast<int>(z.size()) != num_vars()) return false;
  switch (kind) {
    case DomainKind::ClosedDisk: return std::abs(z[0]) <= 1.0 + kSlack;
    case DomainKind::ClosedBidisk: return std::abs(z[0]) <= 1.0 + kSlack && std::abs(z[1]) <= 1.0 + kSlack;
    case DomainKind::Torus2:
      return std::abs(std::abs(z[0]) - 1.0) <= kSlack && std::abs(std::abs(z[1]) - 1.0) <= kSlack;
    case DomainKind::FiberDisk: return std::abs(z[0] - a) <= kSlack && std::abs(z[1]) <= 1.0 + kSlack;
    case DomainKind::Face:
      return std::abs(z[face_var] - a) <= kSlack && std::abs(z[1 - face_var]) <= 1.0 + kSlack;
  }
  return false;
}

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::ClosedBidisk: return "bidisk";
    case DomainKind::Torus2: return "torus";
    case DomainKind::ClosedDisk: return "disk";
    case DomainKind::FiberDisk: return "fiber";
    case DomainKind::Face: return "face";
  }
  return "?";
}

std::string describe(const SampleDomain& d) {
  std::ostringstream os;
  os << to_string(d.kind);
  if (d.kind == DomainKind::FiberDisk) os << "(z1=" << d.a.real() << (d.a.imag() < 0 ? "" : "+") << d.a.imag() << "i)";
  if (d.kind == DomainKind::Face)
    os << "(z" << d.face_var + 1 << "=" << d.a.real() << (d.a.imag() < 0 ? "" : "+") << d.a.imag() << "i)";
  return os.str();
}

PointSet sample_domain(const SampleDomain& d) { return build(d, 1); }
PointSet validation_grid(const SampleDomain& d) { return build(d, 2); }

}  // namespace pluri
