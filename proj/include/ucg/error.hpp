#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ucg {

enum class ErrorCode {
  InvalidGraph,
  TooManyVertices,
  MalformedInput,
  NotUcg,
  RadiusTooSmall,
  NotSpanningSubgraph,
  InvalidCovering,
  InvalidDrop,
  PreconditionViolated,
  InternalAssertion,
  BoundExceeded,
  DomainError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotUcg: return "NotUcg";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::NotSpanningSubgraph: return "NotSpanningSubgraph";
    case ErrorCode::InvalidCovering: return "InvalidCovering";
    case ErrorCode::InvalidDrop: return "InvalidDrop";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ucg
