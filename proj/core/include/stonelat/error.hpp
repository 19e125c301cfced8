#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stonelat {

enum class Errc {
  kParse,
  kUnknownLabel,
  kDuplicateLabel,
  kTooSmall,
  kTooLarge,
  kInvalidIndex,
  kCycle,
  kNoMeet,
  kNoBound,
  kBadTable,
  kNotSubset,
  kZeroSource,
  kZeroElement,
  kNotAFilter,
  kNotARepresentation,
  kTheoremViolation,
  kInconsistent,
  kBadPair,
  kBadBasis,
  kSamePoint,
  kPreconditionFailed,
  kNotAHomomorphism,
  kForeignSymbol,
  kAlphabetMismatch,
  kBadAlphabet,
  kNotRooted,
  kBadDepth,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this type; `code()` identifies
// the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace stonelat
