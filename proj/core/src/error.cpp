#include "sphere_lam/error.hpp"

namespace sphere_lam {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotFareyNeighbors: return "NotFareyNeighbors";
    case ErrorKind::NotFareyTriple: return "NotFareyTriple";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::ClosedCurveHasNoArc: return "ClosedCurveHasNoArc";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InternalNonUnique: return "InternalNonUnique";
    case ErrorKind::NotAllPlain: return "NotAllPlain";
    case ErrorKind::UnsupportedBaseCase: return "UnsupportedBaseCase";
    case ErrorKind::BoundExhausted: return "BoundExhausted";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace sphere_lam
