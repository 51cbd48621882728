#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphere_lam {

enum class ErrorKind {
  ZeroVector,
  NotFareyNeighbors,
  NotFareyTriple,
  InvalidCurve,
  ClosedCurveHasNoArc,
  InvalidParameters,
  InternalNonUnique,
  NotAllPlain,
  UnsupportedBaseCase,
  BoundExhausted,
  RankDeficient,
  Overflow,
  Parse,
  Inconsistent,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sphere_lam
