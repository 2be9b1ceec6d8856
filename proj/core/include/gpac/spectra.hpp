#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace gpac {

/// Emptiness threshold on |total mass| below which a spectrum carries no
/// proposition (the lambda = 0 case).
inline constexpr double kMassTolerance = 1e-12;
/// Sign threshold used by classify_truth.
inline constexpr double kTruthTolerance = 1e-12;
/// Allowed deviation of sum(amplitude^2) from one in a WaveVector.
inline constexpr double kUnitNormTolerance = 1e-12;

/// Neumaier-compensated sum; exact to within a few ulps for up to ~1e6 terms.
double compensated_sum(std::span<const double> values) noexcept;

/// Ordered grid of scale points s_1 < s_2 < ... < s_K.
class CardinalScale {
 public:
  /// Throws Error(InvalidScale) when empty or not strictly increasing,
  /// Error(NonFiniteInput) for NaN/inf entries.
  explicit CardinalScale(std::vector<double> values);

  /// Synthetic scale 1, 2, ..., k.
  static CardinalScale ordinal(std::size_t k);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  double front() const noexcept { return values_.front(); }
  double back() const noexcept { return values_.back(); }

  friend bool operator==(const CardinalScale&, const CardinalScale&) = default;

 private:
  std::vector<double> values_;
};

/// Signed mass assignment over a cardinal scale. Immutable once built.
class Spectrum {
 public:
  /// Throws Error(DimensionMismatch) on length mismatch and
  /// Error(NonFiniteInput) for non-finite mass.
  Spectrum(CardinalScale scale, std::vector<double> mass);

  const CardinalScale& scale() const noexcept { return scale_; }
  std::span<const double> mass() const noexcept { return mass_; }
  std::size_t size() const noexcept { return mass_.size(); }

  /// Same scale, every mass multiplied by `factor`.
  Spectrum scaled(double factor) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  CardinalScale scale_;
  std::vector<double> mass_;
};

/// Nonnegative amplitudes with unit Euclidean norm.
class WaveVector {
 public:
  explicit WaveVector(std::vector<double> amplitudes);

  std::span<const double> amplitudes() const noexcept { return amplitudes_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

 private:
  std::vector<double> amplitudes_;
};

enum class TruthValue { True, False, Empty };

std::string_view to_string(TruthValue t) noexcept;

struct Normalized {
  double lambda;
  Spectrum unit;
};

struct WaveForm {
  double lambda;
  WaveVector wave;
};

double total_mass(const Spectrum& sp) noexcept;

/// Sum of mass over scale points with lo <= s_i <= hi.
double partial_information(const Spectrum& sp, double lo, double hi);

Normalized normalize(const Spectrum& sp);

/// Decompose a single-signed spectrum as lambda * |psi|^2.
WaveForm to_wave(const Spectrum& sp);

/// Rebuild lambda * |psi|^2 over `scale` (defaults to ordinal 1..K when absent).
Spectrum from_wave(double lambda, const WaveVector& w, const CardinalScale& scale);
Spectrum from_wave(double lambda, const WaveVector& w);

Spectrum negate(const Spectrum& sp);

TruthValue classify_truth(const Spectrum& sp) noexcept;

}  // namespace gpac
