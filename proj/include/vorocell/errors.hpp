#ifndef VOROCELL_ERRORS_HPP
#define VOROCELL_ERRORS_HPP

#include <stdexcept>

namespace vorocell {

// Scalar argument outside its admissible range (p < 1, eps outside [0,2], ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A direction was requested for a vector of (numerically) zero norm.
struct ZeroVectorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// x1 + x2 vanished where the strong triangle inequality needs it nonzero.
struct ZeroSumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoSignChangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadOriginError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotOnBisectorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vorocell

#endif  // VOROCELL_ERRORS_HPP
