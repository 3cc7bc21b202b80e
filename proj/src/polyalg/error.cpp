#include "pluri/error.hpp"

namespace pluri {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Structural: return "structural";
    case ErrorCode::UndefinedGcd: return "undefined_gcd";
    case ErrorCode::ZeroInput: return "zero_input";
    case ErrorCode::NoLeaf: return "no_leaf";
    case ErrorCode::DegenerateLeaf: return "degenerate_leaf";
    case ErrorCode::ContourTooClose: return "contour_too_close";
    case ErrorCode::Quadrature: return "quadrature";
    case ErrorCode::UnsupportedMultiplicity: return "unsupported_multiplicity";
    case ErrorCode::FaceDisk: return "face_disk";
    case ErrorCode::BasisSize: return "basis_size";
    case ErrorCode::DegenerateBasis: return "degenerate_basis";
    case ErrorCode::InsufficientSamples: return "insufficient_samples";
    case ErrorCode::OutsideDomain: return "outside_domain";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace pluri
