#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

enum class ErrorCode {
  InversionOfNegInfinity,
  RootOfNegInfinity,
  ArityMismatch,
  ArityUnsupported,
  EmptyPolynomial,
  MonomialInput,
  NotFull,
  NotTangibleFull,
  ConstantTangibleInput,
  ConstantTangibleAmongInputs,
  InternalInconsistency,
  CertificateSearchExceeded,
  DegreeLimitExceeded,
  InvalidArgument,
  SyntaxError,
};

/// Stable machine-readable name, e.g. "ArityMismatch".
std::string_view error_name(ErrorCode code);

/// Every domain failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& detail);

  /// Zero-based byte offset into the source text.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace tropical
