#include "gpac/pac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "gpac/error.hpp"

namespace gpac {

namespace {

constexpr double kWeightTolerance = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct TrialCounts {
  std::uint64_t successes = 0;
  std::uint64_t erm_hits = 0;
};

class Simulator {
 public:
  Simulator(const PacInstance& inst, double epsilon, std::uint64_t sample_size)
      : inst_(inst), epsilon_(epsilon), sample_size_(sample_size) {
    const auto& w = inst.weights();
    cdf_.resize(w.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      acc += w[i];
      cdf_[i] = acc;
      if (w[i] > 0.0) last_positive_ = i;
    }
    for (std::size_t h = 0; h < inst.hypotheses().size(); ++h) {
      true_means_.push_back(inst.true_mean(h));
    }
    best_ = static_cast<std::size_t>(
        std::min_element(true_means_.begin(), true_means_.end()) - true_means_.begin());
  }

  std::size_t best() const noexcept { return best_; }

  TrialCounts run(std::uint64_t seed, std::uint64_t first, std::uint64_t last) const {
    TrialCounts counts;
    std::vector<std::uint64_t> hits(cdf_.size());
    std::vector<double> terms(cdf_.size());
    for (std::uint64_t t = first; t < last; ++t) {
      std::mt19937_64 gen(trial_seed(seed, t));
      std::fill(hits.begin(), hits.end(), 0);
      for (std::uint64_t k = 0; k < sample_size_; ++k) ++hits[draw(gen)];

      double worst = 0.0;
      std::size_t erm = 0;
      double erm_value = std::numeric_limits<double>::infinity();
      const auto& hyps = inst_.hypotheses();
      for (std::size_t h = 0; h < hyps.size(); ++h) {
        for (std::size_t x = 0; x < hits.size(); ++x) {
          terms[x] = static_cast<double>(hits[x]) * hyps[h].values[x];
        }
        const double empirical = compensated_sum(terms) / static_cast<double>(sample_size_);
        worst = std::max(worst, std::fabs(empirical - true_means_[h]));
        if (empirical < erm_value) {
          erm_value = empirical;
          erm = h;
        }
      }
      if (worst <= epsilon_) ++counts.successes;
      if (erm == best_) ++counts.erm_hits;
    }
    return counts;
  }

 private:
  std::size_t draw(std::mt19937_64& gen) const {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) return last_positive_;
    return static_cast<std::size_t>(it - cdf_.begin());
  }

  const PacInstance& inst_;
  double epsilon_;
  std::uint64_t sample_size_;
  std::vector<double> cdf_;
  std::vector<double> true_means_;
  std::size_t last_positive_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

PacConfig::PacConfig(double epsilon, double delta, std::uint64_t hypothesis_count)
    : epsilon_(epsilon), delta_(delta), hypothesis_count_(hypothesis_count) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(Errc::InvalidConfig, "epsilon must lie in (0,1)");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(Errc::InvalidConfig, "delta must lie in (0,1)");
  }
  if (hypothesis_count == 0) {
    throw Error(Errc::InvalidConfig, "hypothesis count must be at least 1");
  }
}

SampleBound sample_bound(const PacConfig& cfg) {
  const double h = static_cast<double>(cfg.hypothesis_count());
  const double exact =
      std::log(2.0 * h / cfg.delta()) / (2.0 * cfg.epsilon() * cfg.epsilon());
  const double next = std::floor(exact) + 1.0;
  if (!(next < 0x1.0p64)) throw Error(Errc::Overflow, "sample bound exceeds 64 bits");
  return {exact, static_cast<std::uint64_t>(next)};
}

bool gpac_normalizable(const Spectrum& sp) noexcept {
  return std::fabs(total_mass(sp)) > kMassTolerance;
}

PacInstance::PacInstance(std::vector<double> domain, std::vector<double> weights,
                         std::vector<Hypothesis> hypotheses)
    : domain_(std::move(domain)), weights_(std::move(weights)), hypotheses_(std::move(hypotheses)) {
  if (domain_.empty()) throw Error(Errc::InvalidConfig, "domain is empty");
  if (weights_.size() != domain_.size()) {
    throw Error(Errc::DimensionMismatch, "weights and domain lengths differ");
  }
  for (double w : weights_) {
    if (!std::isfinite(w)) throw Error(Errc::NonFiniteInput, "weight is not finite");
    if (w < 0.0) throw Error(Errc::NegativeMass, "weights must be nonnegative");
  }
  if (std::fabs(compensated_sum(weights_) - 1.0) > kWeightTolerance) {
    throw Error(Errc::NotNormalized, "weights must sum to 1");
  }
  for (const auto& h : hypotheses_) {
    if (h.values.size() != domain_.size()) {
      throw Error(Errc::DimensionMismatch, "hypothesis '" + h.name + "' has " +
                                               std::to_string(h.values.size()) +
                                               " values for " + std::to_string(domain_.size()) +
                                               " domain points");
    }
    for (double v : h.values) {
      if (!std::isfinite(v)) throw Error(Errc::NonFiniteInput, "hypothesis value is not finite");
      if (v < 0.0 || v > 1.0) {
        throw Error(Errc::InvalidConfig, "hypothesis '" + h.name + "' leaves [0,1]");
      }
    }
  }
}

PacInstance PacInstance::bernoulli() {
  return PacInstance({0.0, 1.0}, {0.5, 0.5},
                     {{"identity", {0.0, 1.0}},
                      {"complement", {1.0, 0.0}},
                      {"half", {0.5, 0.5}},
                      {"half_identity", {0.0, 0.5}}});
}

PacInstance PacInstance::bernoulli_identity() {
  return PacInstance({0.0, 1.0}, {0.5, 0.5}, {{"identity", {0.0, 1.0}}});
}

double PacInstance::true_mean(std::size_t h) const {
  const auto& v = hypotheses_.at(h).values;
  std::vector<double> terms(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) terms[i] = weights_[i] * v[i];
  return compensated_sum(terms);
}

UnitRescale rescale_to_unit(std::vector<Hypothesis>& hypotheses) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& h : hypotheses) {
    for (double v : h.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hypotheses.empty() || (lo >= 0.0 && hi <= 1.0)) return {};
  const UnitRescale r{lo, hi > lo ? 1.0 / (hi - lo) : 1.0};
  for (auto& h : hypotheses) {
    for (double& v : h.values) v = std::clamp((v - r.offset) * r.factor, 0.0, 1.0);
  }
  return r;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return splitmix64(splitmix64(seed) + trial);
}

TrialReport run_pac_simulation(const PacInstance& inst, const PacConfig& cfg,
                               std::uint64_t sample_size, std::uint64_t trials,
                               std::uint64_t seed, unsigned threads) {
  if (inst.hypotheses().empty()) throw Error(Errc::EmptyHypothesisSet, "no hypotheses");
  if (sample_size == 0) throw Error(Errc::InvalidSampleSize, "sample size must be at least 1");
  if (trials == 0) throw Error(Errc::InvalidSampleSize, "trial count must be at least 1");

  const Simulator sim(inst, cfg.epsilon(), sample_size);
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, trials);
  std::vector<TrialCounts> partial(workers);
  if (workers == 1) {
    partial[0] = sim.run(seed, 0, trials);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = std::min(trials, w * chunk);
      const std::uint64_t last = std::min(trials, first + chunk);
      pool.emplace_back([&, w, first, last] { partial[w] = sim.run(seed, first, last); });
    }
  }

  TrialReport report;
  for (const auto& p : partial) {
    report.successes += p.successes;
    report.erm_agreement += static_cast<double>(p.erm_hits);
  }
  const auto bound = sample_bound(cfg);
  report.trials = trials;
  report.success_rate = static_cast<double>(report.successes) / static_cast<double>(trials);
  report.sample_size = sample_size;
  report.bound = bound.exact;
  report.required = bound.required;
  report.passed = report.success_rate >= 1.0 - cfg.delta();
  report.best_hypothesis = sim.best();
  report.erm_agreement /= static_cast<double>(trials);
  return report;
}

}  // namespace gpac
