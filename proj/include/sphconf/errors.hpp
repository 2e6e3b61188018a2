#pragma once

#include <stdexcept>
#include <string>

namespace sphconf {

// Two error families, matching the CLI exit-code contract:
// ArgumentError -> exit 2 (caller passed something unusable),
// NumericError  -> exit 3 (the computation itself broke down).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ArgumentError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};

// A required structural property of the input is absent (e.g. a perturbation
// construction applied to a config that does not satisfy its hypotheses).
struct NotApplicableError : ArgumentError {
  using ArgumentError::ArgumentError;
};
// The operation needs a degenerate (rank-deficient) config and got a spanning one.
struct NotDegenerateError : ArgumentError {
  using ArgumentError::ArgumentError;
};
// The operation is outside the supported shape (e.g. classification for N != d+2).
struct UnsupportedError : ArgumentError {
  using ArgumentError::ArgumentError;
};
// A root/crossover bracket does not actually bracket a sign change.
struct BracketError : ArgumentError {
  using ArgumentError::ArgumentError;
};

// Two points (nearly) coincide where the pair potential is singular.
struct SingularPairError : NumericError {
  using NumericError::NumericError;
};
// The spherical-chart gauge cannot be fixed (x2 at a pole after rotation).
struct GaugeSingularError : NumericError {
  using NumericError::NumericError;
};
// A config passed the stationarity gate but its structure is inconsistent
// with every known class; details carried in the message.
struct ClassificationError : NumericError {
  using NumericError::NumericError;
};
// A derivative-based operation was handed a point that is not critical.
struct NotStationaryError : NumericError {
  using NumericError::NumericError;
};

}  // namespace sphconf
