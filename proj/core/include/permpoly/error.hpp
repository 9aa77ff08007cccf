#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permpoly {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  TrivialIdeal,
  MixedRings,
  NonUnitInverse,
  NotAField,
  FieldTooSmall,
  EqualPoints,
  ZeroPoint,
  NotPrimeField,
  NotLocalRing,
  ResidueNotPermutation,
  GNotUnitValued,
  CongruentPoints,
  NotBijective,
  RingTooLarge,
  ResidueFieldTooSmall,
  ExpansionTooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every algebraic operation in the library.
/// ParseError is the only code that signals malformed input rather than a
/// mathematical precondition violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace permpoly
