#include "linial/error.hpp"

namespace linial {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::QTooSmall: return "QTooSmall";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace linial
