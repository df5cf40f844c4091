#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gincoh {

// Stable codes; the numeric values are mirrored by gincoh_status in gincoh.h.
enum class ErrorCode {
  kParse = 1,
  kInvalidArgument = 2,
  kAmbientMismatch = 3,
  kCapacity = 4,
  kSingularMatrix = 5,
  kGenericity = 6,
  kNotStronglyStable = 7,
  kNotSquarefree = 8,
  kAmbientGrowth = 9,
  kInconsistent = 10,
  kWindowInstability = 11,
  kIo = 12,
  kInternal = 13,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gincoh
