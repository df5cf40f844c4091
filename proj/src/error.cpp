#include "gincoh/error.hpp"

namespace gincoh {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "E_PARSE";
    case ErrorCode::kInvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::kAmbientMismatch: return "E_AMBIENT_MISMATCH";
    case ErrorCode::kCapacity: return "E_CAPACITY";
    case ErrorCode::kSingularMatrix: return "E_SINGULAR_MATRIX";
    case ErrorCode::kGenericity: return "E_GENERICITY";
    case ErrorCode::kNotStronglyStable: return "E_NOT_STRONGLY_STABLE";
    case ErrorCode::kNotSquarefree: return "E_NOT_SQUAREFREE";
    case ErrorCode::kAmbientGrowth: return "E_AMBIENT_GROWTH";
    case ErrorCode::kInconsistent: return "E_INCONSISTENT";
    case ErrorCode::kWindowInstability: return "E_WINDOW_INSTABILITY";
    case ErrorCode::kIo: return "E_IO";
    case ErrorCode::kInternal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

}  // namespace gincoh
