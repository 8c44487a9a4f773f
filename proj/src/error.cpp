#include "mlinv/error.hpp"

namespace mlinv {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "ok";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::SingularMatrix: return "singular_matrix";
    case ErrorCode::CapExceeded: return "cap_exceeded";
    case ErrorCode::InvalidPermutation: return "invalid_permutation";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NotInSpan: return "not_in_span";
    case ErrorCode::DependentBasis: return "dependent_basis";
    case ErrorCode::InsufficientCandidates: return "insufficient_candidates";
    case ErrorCode::OddCoefficient: return "odd_coefficient";
    case ErrorCode::ResourceLimit: return "resource_limit";
    case ErrorCode::Io: return "io_error";
    case ErrorCode::Internal: return "internal_error";
  }
  return "unknown";
}

}  // namespace mlinv
