#include "tropical/error.hpp"

namespace tropical {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InversionOfNegInfinity: return "InversionOfNegInfinity";
    case ErrorCode::RootOfNegInfinity: return "RootOfNegInfinity";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ArityUnsupported: return "ArityUnsupported";
    case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::MonomialInput: return "MonomialInput";
    case ErrorCode::NotFull: return "NotFull";
    case ErrorCode::NotTangibleFull: return "NotTangibleFull";
    case ErrorCode::ConstantTangibleInput: return "ConstantTangibleInput";
    case ErrorCode::ConstantTangibleAmongInputs: return "ConstantTangibleAmongInputs";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CertificateSearchExceeded: return "CertificateSearchExceeded";
    case ErrorCode::DegreeLimitExceeded: return "DegreeLimitExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected,
                     const std::string& detail) {
  std::string out = "at position " + std::to_string(position) + ": " + detail;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& detail)
    : Error(ErrorCode::SyntaxError, describe(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace tropical
