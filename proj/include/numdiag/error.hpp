#ifndef NUMDIAG_ERROR_HPP
#define NUMDIAG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace numdiag {

// Closed error taxonomy. Every domain failure maps to exactly one code;
// the code name is part of the CLI contract (printed verbatim on exit 1).
enum class ErrorCode {
  NotStartingAtZero,
  NotStrictlyIncreasing,
  NonProperInput,
  NotASemigroup,
  NotAnElement,
  Overflow,
  PreconditionFailed,
  NotAPartition,
  EmptyPartition,
  LeftIdentityUndefined,
  NotSymmetric,
  NotAlmostSymmetric,
  ExcludedBaseCase,
  TypeTooSmall,
  BlockSplit,
  NonConsecutivePF,
  IndexOutOfRange,
  BoundTooLarge,
  UnknownTheorem,
};

const char* error_name(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  explicit DomainError(ErrorCode code) : DomainError(code, "") {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace numdiag

#endif
