#pragma once

#include <stdexcept>
#include <string>

namespace mlinv {

// Numeric values are part of the C ABI (see c_api.h); do not renumber.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  Parse = 2,
  DivisionByZero = 3,
  SingularMatrix = 4,
  CapExceeded = 5,
  InvalidPermutation = 6,
  DimensionMismatch = 7,
  NotInSpan = 8,
  DependentBasis = 9,
  InsufficientCandidates = 10,
  OddCoefficient = 11,
  ResourceLimit = 12,
  Io = 13,
  Internal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mlinv
