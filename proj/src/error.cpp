#include "wsp/error.hpp"

namespace wsp {

std::string_view toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::OverlappingSubsets: return "OverlappingSubsets";
    case ErrorKind::InvalidCoefficientSequence: return "InvalidCoefficientSequence";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NotSplitInclusion: return "NotSplitInclusion";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::NotSL: return "NotSL";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnsupportedDegreePattern: return "UnsupportedDegreePattern";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace wsp
