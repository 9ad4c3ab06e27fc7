#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecassoc {

/// Failure categories raised by the library. The CLI maps `ParseError` to
/// exit status 2 and everything else to exit status 1.
enum class ErrorCode {
  ParseError,
  Unsupported,
  MixedFields,
  DivisionByZero,
  NotPrime,
  ReducibleModulus,
  InfiniteField,
  InvalidPoint,
  CoincidentPoints,
  SingularCurve,
  SingularPoint,
  NotOnCurve,
  CrossCurve,
  LineOnCurve,
  DichotomyViolation,
  PointAtInfinity,
  ChainCheckFailed,
  TripleCoincidence,
  WitnessExtractionFailed,
  RankDeficient,
  KernelDimUnexpected,
  SpanFailure,
  UnmatchedPattern,
  DepthExceeded,
  AxiomFailure,
  CertificateFailure,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace ecassoc
