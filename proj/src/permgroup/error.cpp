#include "pregal/error.hpp"

namespace pregal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotCoreFree: return "NotCoreFree";
    case ErrorKind::NotAComplement: return "NotAComplement";
    case ErrorKind::NotNormalComplement: return "NotNormalComplement";
    case ErrorKind::NotZSProduct: return "NotZSProduct";
    case ErrorKind::NotCharacteristic: return "NotCharacteristic";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::CenterNotTrivial: return "CenterNotTrivial";
    case ErrorKind::NoRationalPoint: return "NoRationalPoint";
    case ErrorKind::EmptyTupleSet: return "EmptyTupleSet";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::NotWeaklyRational: return "NotWeaklyRational";
  }
  return "Unknown";
}

}  // namespace pregal
