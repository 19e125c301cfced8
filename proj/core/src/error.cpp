#include "stonelat/error.hpp"

namespace stonelat {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kParse: return "ParseError";
    case Errc::kUnknownLabel: return "UnknownLabel";
    case Errc::kDuplicateLabel: return "DuplicateLabel";
    case Errc::kTooSmall: return "TooSmall";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kInvalidIndex: return "InvalidIndex";
    case Errc::kCycle: return "Cycle";
    case Errc::kNoMeet: return "NoMeet";
    case Errc::kNoBound: return "NoBound";
    case Errc::kBadTable: return "BadTable";
    case Errc::kNotSubset: return "NotSubset";
    case Errc::kZeroSource: return "ZeroSource";
    case Errc::kZeroElement: return "ZeroElement";
    case Errc::kNotAFilter: return "NotAFilter";
    case Errc::kNotARepresentation: return "NotARepresentation";
    case Errc::kTheoremViolation: return "TheoremViolation";
    case Errc::kInconsistent: return "Inconsistent";
    case Errc::kBadPair: return "BadPair";
    case Errc::kBadBasis: return "BadBasis";
    case Errc::kSamePoint: return "SamePoint";
    case Errc::kPreconditionFailed: return "PreconditionFailed";
    case Errc::kNotAHomomorphism: return "NotAHomomorphism";
    case Errc::kForeignSymbol: return "ForeignSymbol";
    case Errc::kAlphabetMismatch: return "AlphabetMismatch";
    case Errc::kBadAlphabet: return "BadAlphabet";
    case Errc::kNotRooted: return "NotRooted";
    case Errc::kBadDepth: return "BadDepth";
  }
  return "Unknown";
}

}  // namespace stonelat
