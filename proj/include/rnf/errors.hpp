#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rnf {

enum class ErrorCode {
  ZeroPolynomial,
  RankDeficient,
  CertificateTooWeak,
  PrecisionExhausted,
  ZeroElement,
  RequiresCertificate,
  ClassTooLarge,
  ShapeMismatch,
  Singular,
  NotReducedInput,
  NotMaximal,
  InconsistentFrames,
  BoundUnmet,
  PrimeCollision,
  VerificationFailed,
  InvalidInput,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::CertificateTooWeak: return "CertificateTooWeak";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::RequiresCertificate: return "RequiresCertificate";
    case ErrorCode::ClassTooLarge: return "ClassTooLarge";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotReducedInput: return "NotReducedInput";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::InconsistentFrames: return "InconsistentFrames";
    case ErrorCode::BoundUnmet: return "BoundUnmet";
    case ErrorCode::PrimeCollision: return "PrimeCollision";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rnf
