#include "gpac/spectra.hpp"

#include <cmath>
#include <string>

#include "gpac/error.hpp"

namespace gpac {

double compensated_sum(std::span<const double> values) noexcept {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

CardinalScale::CardinalScale(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(Errc::InvalidScale, "cardinal scale must have at least one point");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(Errc::NonFiniteInput, "scale value " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw Error(Errc::InvalidScale,
                  "scale must be strictly increasing (index " + std::to_string(i) + ")");
    }
  }
}

CardinalScale CardinalScale::ordinal(std::size_t k) {
  std::vector<double> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<double>(i + 1);
  return CardinalScale(std::move(v));
}

Spectrum::Spectrum(CardinalScale scale, std::vector<double> mass)
    : scale_(std::move(scale)), mass_(std::move(mass)) {
  if (mass_.size() != scale_.size()) {
    throw Error(Errc::DimensionMismatch, "mass has " + std::to_string(mass_.size()) +
                                             " entries, scale has " +
                                             std::to_string(scale_.size()));
  }
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (!std::isfinite(mass_[i])) {
      throw Error(Errc::NonFiniteInput, "mass " + std::to_string(i) + " is not finite");
    }
  }
}

Spectrum Spectrum::scaled(double factor) const {
  std::vector<double> m(mass_.begin(), mass_.end());
  for (double& x : m) x *= factor;
  return Spectrum(scale_, std::move(m));
}

WaveVector::WaveVector(std::vector<double> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) {
    throw Error(Errc::DimensionMismatch, "wave vector must be nonempty");
  }
  std::vector<double> squares;
  squares.reserve(amplitudes_.size());
  for (double a : amplitudes_) {
    if (!std::isfinite(a)) throw Error(Errc::NonFiniteInput, "amplitude is not finite");
    if (a < 0.0) throw Error(Errc::NegativeMass, "amplitudes must be nonnegative");
    squares.push_back(a * a);
  }
  const double norm = compensated_sum(squares);
  if (std::fabs(norm - 1.0) > kUnitNormTolerance) {
    throw Error(Errc::NotNormalized, "sum of squared amplitudes is " + std::to_string(norm));
  }
}

std::string_view to_string(TruthValue t) noexcept {
  switch (t) {
    case TruthValue::True: return "True";
    case TruthValue::False: return "False";
    case TruthValue::Empty: return "Empty";
  }
  return "Empty";
}

double total_mass(const Spectrum& sp) noexcept { return compensated_sum(sp.mass()); }

double partial_information(const Spectrum& sp, double lo, double hi) {
  if (lo > hi) throw Error(Errc::BoundsReversed, "lower bound exceeds upper bound");
  std::vector<double> picked;
  const auto s = sp.scale().values();
  const auto m = sp.mass();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (lo <= s[i] && s[i] <= hi) picked.push_back(m[i]);
  }
  return compensated_sum(picked);
}

Normalized normalize(const Spectrum& sp) {
  const double lambda = total_mass(sp);
  if (std::fabs(lambda) <= kMassTolerance) {
    throw Error(Errc::EmptyProposition, "total mass is zero");
  }
  std::vector<double> unit(sp.mass().begin(), sp.mass().end());
  for (double& x : unit) x /= lambda;
  return {lambda, Spectrum(sp.scale(), std::move(unit))};
}

WaveForm to_wave(const Spectrum& sp) {
  bool pos = false;
  bool neg = false;
  for (double x : sp.mass()) {
    pos = pos || x > 0.0;
    neg = neg || x < 0.0;
  }
  if (pos && neg) throw Error(Errc::MixedSign, "spectrum mixes positive and negative mass");
  const double lambda = total_mass(sp);
  if (std::fabs(lambda) <= kMassTolerance) {
    throw Error(Errc::EmptyProposition, "total mass is zero");
  }
  std::vector<double> amp;
  amp.reserve(sp.size());
  const double denom = std::fabs(lambda);
  for (double x : sp.mass()) amp.push_back(std::sqrt(std::fabs(x) / denom));
  return {lambda, WaveVector(std::move(amp))};
}

Spectrum from_wave(double lambda, const WaveVector& w, const CardinalScale& scale) {
  if (!std::isfinite(lambda) || lambda == 0.0) {
    throw Error(Errc::NonFiniteLambda, "lambda must be finite and nonzero");
  }
  if (scale.size() != w.size()) {
    throw Error(Errc::DimensionMismatch, "wave vector and scale lengths differ");
  }
  std::vector<double> m;
  m.reserve(w.size());
  for (double a : w.amplitudes()) m.push_back(lambda * a * a);
  return Spectrum(scale, std::move(m));
}

Spectrum from_wave(double lambda, const WaveVector& w) {
  return from_wave(lambda, w, CardinalScale::ordinal(w.size()));
}

Spectrum negate(const Spectrum& sp) {
  std::vector<double> m(sp.mass().begin(), sp.mass().end());
  // 0.0 - x rather than -x so zero entries stay +0
  for (double& x : m) x = 0.0 - x;
  return Spectrum(sp.scale(), std::move(m));
}

TruthValue classify_truth(const Spectrum& sp) noexcept {
  const double lambda = total_mass(sp);
  if (lambda > kTruthTolerance) return TruthValue::True;
  if (lambda < -kTruthTolerance) return TruthValue::False;
  return TruthValue::Empty;
}

}  // namespace gpac
