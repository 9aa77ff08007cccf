#include "permpoly/error.hpp"

namespace permpoly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::TrivialIdeal: return "TrivialIdeal";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::NonUnitInverse: return "NonUnitInverse";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::NotPrimeField: return "NotPrimeField";
    case ErrorCode::NotLocalRing: return "NotLocalRing";
    case ErrorCode::ResidueNotPermutation: return "ResidueNotPermutation";
    case ErrorCode::GNotUnitValued: return "GNotUnitValued";
    case ErrorCode::CongruentPoints: return "CongruentPoints";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::RingTooLarge: return "RingTooLarge";
    case ErrorCode::ResidueFieldTooSmall: return "ResidueFieldTooSmall";
    case ErrorCode::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace permpoly
