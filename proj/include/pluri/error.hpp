#pragma once

#include <stdexcept>
#include <string>

namespace pluri {

enum class ErrorCode {
  Structural,         // shape or variable-count mismatch, bad index
  UndefinedGcd,       // gcd of two zero polynomials
  ZeroInput,          // operation needs a nonzero polynomial
  NoLeaf,             // generator is holomorphic, no level-set lamination
  DegenerateLeaf,     // curve does not meet the closed bidisk
  ContourTooClose,    // a zero sits on (or too near) the contour
  Quadrature,         // node doubling did not converge
  UnsupportedMultiplicity,
  FaceDisk,           // some arc has no usable generator: a face disk exists
  BasisSize,
  DegenerateBasis,
  InsufficientSamples,
  OutsideDomain,
  Parse,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pluri
