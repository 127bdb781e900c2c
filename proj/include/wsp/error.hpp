#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsp {

enum class ErrorKind {
  DimensionMismatch,
  SingularInput,
  NotSaturated,
  OverlappingSubsets,
  InvalidCoefficientSequence,
  NotAComplex,
  NotSplitInclusion,
  NotACycle,
  DegreeTooSmall,
  NotClosed,
  NotUnital,
  WrongRank,
  NotSL,
  InvalidInput,
  UnsupportedDegreePattern,
  Internal,
};

std::string_view toString(ErrorKind kind);

/// Domain error raised by every module. The kind is stable and is what the
/// CLI reports in its "error" field.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(toString(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wsp
