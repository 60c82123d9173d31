#pragma once

#include <stdexcept>
#include <string>

namespace gdual {

// Machine-matchable failure kinds used across the library.
enum class Errc {
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  UnsupportedSize,
  BInCyclicSubgroup,
  IndexOutOfRange,
  NotARootOfUnity,
  NotUnitVector,
  NotAnEigenpair,
  NotAbelian,
  NotPositiveDefiniteOnSubgroup,
  DuplicateElements,
  NoComposablePosition,
  FingerprintCollision,
  NoUniqueProduct,
  NotInDoubleCoset,
  NotOrthogonal,
  DimensionMismatch,
  UsageError,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gdual
