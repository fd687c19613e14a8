#include "latquot/error.hpp"

namespace latquot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::EmptyLattice: return "EmptyLattice";
    case ErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::MalformedPartition: return "MalformedPartition";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::NotAboveKernel: return "NotAboveKernel";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

NotALatticeError::NotALatticeError(std::string x, std::string y,
                                   std::string_view missing)
    : Error(ErrorKind::NotALattice,
            "not a lattice: elements " + x + " and " + y + " have no unique " +
                std::string(missing)),
      x_(std::move(x)),
      y_(std::move(y)),
      missing_(missing) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorKind::SyntaxError,
            "syntax error at position " + std::to_string(position) + ": " +
                message),
      position_(position) {}

}  // namespace latquot
