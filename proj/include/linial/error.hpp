#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linial {

enum class ErrorCode {
  InvalidArgument,
  InvalidRank,
  UnsupportedRank,
  DegreeMismatch,
  ZeroPolynomial,
  InexactDivision,
  NotAdmissible,
  SymmetryViolation,
  QTooSmall,
  NonConvergence,
  Internal,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linial
