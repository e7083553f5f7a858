#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

enum class ErrorCode {
  DegenerateFactor,
  PrecisionUnreachable,
  DimensionMismatch,
  IndexOutOfRange,
  NotHomogeneous,
  CompositionMismatch,
  NotElliptic,
  PositivityUnverified,
  QuadratureDidNotConverge,
  RegularityViolated,
  PositiveEntry,
  Pole,
  HypothesisViolated,
  IraViolated,
  ThetaDegenerate,
  NotDiagonal,
  DomainViolation,
  ContinuationDepthInsufficient,
  ParseError,
  InvalidArgument,
};

const char *error_code_name(ErrorCode code);

class MzvError : public std::runtime_error {
public:
  MzvError(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw MzvError(code, what);
}

} // namespace mzv
