#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpac/spectra.hpp"

namespace gpac {

/// Token alphabet an object is read in: fixed-width tokens, a count of
/// well-formed tokens, and an optional membership test.
///
/// A counting-only environment (no validator) treats every token of the right
/// width as well formed; only `valid_count` enters the information formulas.
class Environment {
 public:
  using Validator = std::function<bool(std::string_view)>;

  Environment(std::string name, std::size_t token_width, std::uint64_t valid_count,
              Validator validator = {});

  /// Width-1 environment over the given symbols.
  static Environment alphabet(std::string name, std::string_view symbols);
  /// Environment whose well-formed tokens are exactly `tokens` (all one width).
  static Environment from_tokens(std::string name, std::vector<std::string> tokens);

  /// Single nucleotides A, C, G, T.
  static Environment dna_base();
  /// The 61 sense codons: all 64 triplets minus the stop codons TAA, TAG, TGA.
  static Environment dna_codon();

  const std::string& name() const noexcept { return name_; }
  std::size_t token_width() const noexcept { return token_width_; }
  std::uint64_t valid_count() const noexcept { return valid_count_; }
  bool counting_only() const noexcept { return !validator_; }

  bool accepts(std::string_view token) const;

 private:
  std::string name_;
  std::size_t token_width_;
  std::uint64_t valid_count_;
  Validator validator_;
};

/// `tokens` is empty (nullopt) when the source is ill formed in its environment.
struct WellFormedObject {
  std::string source;
  std::optional<std::vector<std::string>> tokens;

  bool ill_formed() const noexcept { return !tokens.has_value(); }
};

WellFormedObject tokenize(std::string_view text, const Environment& env);

struct InformationAmount {
  double bits = 0.0;
  bool ill_formed = false;
  std::size_t token_count = 0;
};

/// log2 of the number of well-formed strings with the same token count.
/// Ill-formed text counts as the empty string: zero bits, flag set.
InformationAmount string_information(std::string_view text, const Environment& env);

/// log2(|Phi(A)| / class_size), where class_size strings are read as the same
/// object. Computed in log space; |Phi(A)| is never materialized.
double interpreted_information(std::string_view text, const Environment& env,
                               std::uint64_t class_size);

/// sum_i s_i^order * mass_i. Order 1 is the plain complexity c(h).
double origin_complexity(const Spectrum& sp, unsigned order);

/// sum_i (s_i - c)^order * mass_i with c = origin_complexity(sp, 1).
/// For spectra whose total mass is not one this is deliberately not the
/// textbook central moment.
double central_complexity(const Spectrum& sp, unsigned order);

/// -sum p log2 p over the masses (scale values are ignored).
/// Throws NegativeMass / NotNormalized (total outside 1 +- 1e-9).
double shannon_entropy(const Spectrum& sp);

/// Spectrum whose scale carries -log2 p_i and whose mass is p_i. Zero masses
/// drop out (0 log 0 = 0) and equal surprisal values are merged.
Spectrum surprisal_spectrum(const Spectrum& sp);

/// Entropy as the first origin complexity of surprisal_spectrum(sp).
double shannon_entropy_as_complexity(const Spectrum& sp);

}  // namespace gpac
