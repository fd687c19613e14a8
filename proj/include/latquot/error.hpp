#ifndef LATQUOT_ERROR_HPP
#define LATQUOT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latquot {

enum class ErrorKind {
  DuplicateElement,
  UnknownElement,
  CycleDetected,
  NotALattice,
  EmptyLattice,
  EmptyGeneratorSet,
  SizeLimitExceeded,
  MalformedPartition,
  NotACongruence,
  LatticeMismatch,
  NotAboveKernel,
  SyntaxError,
  UnboundVariable,
  UnsupportedRank,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Base class of every error raised by the library. The kind is stable and
/// is what callers (and the CLI exit-code mapping) should switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a pair of elements has no unique meet or join.
class NotALatticeError : public Error {
 public:
  NotALatticeError(std::string x, std::string y, std::string_view missing);

  const std::string& x() const noexcept { return x_; }
  const std::string& y() const noexcept { return y_; }
  /// "meet" or "join".
  const std::string& missing() const noexcept { return missing_; }

 private:
  std::string x_;
  std::string y_;
  std::string missing_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace latquot

#endif  // LATQUOT_ERROR_HPP
