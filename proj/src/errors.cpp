#include "bsdecomp/errors.hpp"

namespace bsdecomp {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyColumn: return "EmptyColumn";
    case ErrorKind::NotADegreeSequence: return "NotADegreeSequence";
    case ErrorKind::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::UnsupportedCodimension: return "UnsupportedCodimension";
    case ErrorKind::RequiresStrictDegrees: return "RequiresStrictDegrees";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bsdecomp
