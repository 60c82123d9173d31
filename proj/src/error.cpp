#include "gdual/error.hpp"

namespace gdual {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::BInCyclicSubgroup: return "BInCyclicSubgroup";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotARootOfUnity: return "NotARootOfUnity";
    case Errc::NotUnitVector: return "NotUnitVector";
    case Errc::NotAnEigenpair: return "NotAnEigenpair";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotPositiveDefiniteOnSubgroup: return "NotPositiveDefiniteOnSubgroup";
    case Errc::DuplicateElements: return "DuplicateElements";
    case Errc::NoComposablePosition: return "NoComposablePosition";
    case Errc::FingerprintCollision: return "FingerprintCollision";
    case Errc::NoUniqueProduct: return "NoUniqueProduct";
    case Errc::NotInDoubleCoset: return "NotInDoubleCoset";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UsageError: return "UsageError";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace gdual
