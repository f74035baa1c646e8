#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmw {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  DivisionByZero,
  OutOfRangeElement,
  LengthMismatch,
  CycleDetected,
  IdealCountCapExceeded,
  NotAnIdeal,
  GroundSetTooLarge,
  NotASubgroup,
  NotAutomorphisms,
  PosetMismatch,
  InvalidPartition,
  CodeTooLarge,
  SphereTooLarge,
  NotMacWilliamsType,
  NonIntegralQuotient,
  ZeroGenerator,
  OutOfRange,
  TooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Resource caps (ideal count, code size, sphere size, ...) as opposed to
  /// malformed input.
  bool is_resource_cap() const noexcept {
    return code_ == ErrorCode::IdealCountCapExceeded || code_ == ErrorCode::CodeTooLarge ||
           code_ == ErrorCode::SphereTooLarge || code_ == ErrorCode::GroundSetTooLarge ||
           code_ == ErrorCode::TooLarge;
  }

 private:
  ErrorCode code_;
};

}  // namespace pmw
