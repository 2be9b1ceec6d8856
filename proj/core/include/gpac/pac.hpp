#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gpac/spectra.hpp"

namespace gpac {

/// Accuracy/confidence pair and hypothesis-class size for a PAC question.
class PacConfig {
 public:
  /// Throws Error(InvalidConfig) unless 0 < epsilon < 1, 0 < delta < 1 and
  /// hypothesis_count >= 1.
  PacConfig(double epsilon, double delta, std::uint64_t hypothesis_count);

  double epsilon() const noexcept { return epsilon_; }
  double delta() const noexcept { return delta_; }
  std::uint64_t hypothesis_count() const noexcept { return hypothesis_count_; }

 private:
  double epsilon_;
  double delta_;
  std::uint64_t hypothesis_count_;
};

struct SampleBound {
  double exact;            ///< ln(2|H|/delta) / (2 epsilon^2)
  std::uint64_t required;  ///< smallest integer strictly greater than `exact`
};

SampleBound sample_bound(const PacConfig& cfg);

/// True iff the spectrum's total mass is nonzero, i.e. it can be divided by
/// its amount of information and read as a distribution.
bool gpac_normalizable(const Spectrum& sp) noexcept;

struct Hypothesis {
  std::string name;
  std::vector<double> values;  ///< one value in [0,1] per domain point
};

/// Finite domain, sampling distribution over it, and a finite hypothesis class.
class PacInstance {
 public:
  /// Validates weights (nonnegative, sum 1 within 1e-12), lengths and that
  /// every hypothesis value lies in [0,1]. An empty hypothesis list is allowed
  /// here and rejected by run_pac_simulation.
  PacInstance(std::vector<double> domain, std::vector<double> weights,
              std::vector<Hypothesis> hypotheses);

  /// X = {0,1}, D = Bernoulli(0.5) and four hypotheses: x, 1-x, 0.5, x/2.
  static PacInstance bernoulli();
  /// X = {0,1}, D = Bernoulli(0.5) and the single hypothesis h(x) = x.
  static PacInstance bernoulli_identity();

  const std::vector<double>& domain() const noexcept { return domain_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Hypothesis>& hypotheses() const noexcept { return hypotheses_; }

  /// Expected value of hypothesis `h` under the sampling distribution.
  double true_mean(std::size_t h) const;

 private:
  std::vector<double> domain_;
  std::vector<double> weights_;
  std::vector<Hypothesis> hypotheses_;
};

/// Affine map v -> (v - offset) * factor applied to every hypothesis value.
struct UnitRescale {
  double offset = 0.0;
  double factor = 1.0;
  bool applied() const noexcept { return offset != 0.0 || factor != 1.0; }
};

/// Maps hypothesis values into [0,1] in place when any value lies outside it.
/// Values already inside [0,1] are left untouched (identity rescale).
UnitRescale rescale_to_unit(std::vector<Hypothesis>& hypotheses);

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0.0;
  std::uint64_t sample_size = 0;
  double bound = 0.0;             ///< exact sample bound for the config
  std::uint64_t required = 0;     ///< integer sample bound for the config
  bool passed = false;            ///< success_rate >= 1 - delta
  std::size_t best_hypothesis = 0;  ///< argmin of true mean, lowest index on ties
  double erm_agreement = 0.0;     ///< fraction of trials whose empirical argmin is best_hypothesis

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// Per-trial generator seed: a SplitMix64 mix of (seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

/// Monte-Carlo check of the uniform-convergence event
/// max_h |empirical mean - true mean| <= epsilon over `trials` independent
/// samples of `sample_size` i.i.d. draws. Results do not depend on `threads`.
TrialReport run_pac_simulation(const PacInstance& inst, const PacConfig& cfg,
                               std::uint64_t sample_size, std::uint64_t trials,
                               std::uint64_t seed, unsigned threads = 1);

}  // namespace gpac
