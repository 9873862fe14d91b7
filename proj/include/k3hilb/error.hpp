#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3hilb {

enum class ErrorCode {
  OddSelfIntersection,
  NonHyperbolic,
  KindMismatch,
  PerfectSquare,
  UnsupportedFamily,
  PreconditionNef,
  PreconditionEffective,
  UnsupportedAmbient,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddSelfIntersection: return "odd-self-intersection";
    case ErrorCode::NonHyperbolic: return "non-hyperbolic";
    case ErrorCode::KindMismatch: return "kind-mismatch";
    case ErrorCode::PerfectSquare: return "perfect-square";
    case ErrorCode::UnsupportedFamily: return "unsupported-family";
    case ErrorCode::PreconditionNef: return "precondition-nef";
    case ErrorCode::PreconditionEffective: return "precondition-effective";
    case ErrorCode::UnsupportedAmbient: return "unsupported-ambient";
  }
  return "unknown";
}

/// Domain error raised by the library; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace k3hilb
