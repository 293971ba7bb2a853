#include "steinernet/errors.hpp"

namespace steinernet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorCode::NotImmersed: return "NotImmersed";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::SurgeryDegenerate: return "SurgeryDegenerate";
    case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace steinernet
