#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpac {

/// Failure categories raised by the library. Every public operation reports
/// precondition violations through `gpac::Error` carrying one of these codes.
enum class Errc {
  NonFiniteInput,
  InvalidScale,
  BoundsReversed,
  EmptyProposition,
  MixedSign,
  NonFiniteLambda,
  DimensionMismatch,
  ClassSizeOutOfRange,
  IllFormedInput,
  NotNormalized,
  NegativeMass,
  InvalidConfig,
  EmptyHypothesisSet,
  InvalidSampleSize,
  EmptyCombination,
  NotInSpan,
  AllEqual,
  Overflow,
  BudgetExceeded,
  UnknownDemo,
  Parse,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gpac
