#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jslope {

enum class ErrorKind {
  InvalidArgument,
  InvalidParams,
  DivisionByZero,
  NonExactDivision,
  NotPolynomial,
  ZeroPolynomial,
  InadmissibleColoring,
  NonRealPhase,
  FractionalExponent,
  BelowThreshold,
  InsufficientSamples,
  NoQuadraticFit,
  UnsupportedEdgepath,
  ConstructionFault,
  LimitExceeded,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the C API can map it
// onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace jslope
