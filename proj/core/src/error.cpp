#include "gpac/error.hpp"

namespace gpac {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonFiniteInput: return "NonFiniteInput";
    case Errc::InvalidScale: return "InvalidScale";
    case Errc::BoundsReversed: return "BoundsReversed";
    case Errc::EmptyProposition: return "EmptyProposition";
    case Errc::MixedSign: return "MixedSign";
    case Errc::NonFiniteLambda: return "NonFiniteLambda";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ClassSizeOutOfRange: return "ClassSizeOutOfRange";
    case Errc::IllFormedInput: return "IllFormedInput";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NegativeMass: return "NegativeMass";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::EmptyHypothesisSet: return "EmptyHypothesisSet";
    case Errc::InvalidSampleSize: return "InvalidSampleSize";
    case Errc::EmptyCombination: return "EmptyCombination";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::AllEqual: return "AllEqual";
    case Errc::Overflow: return "Overflow";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnknownDemo: return "UnknownDemo";
    case Errc::Parse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gpac
