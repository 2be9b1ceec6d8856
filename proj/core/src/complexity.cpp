#include "gpac/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "gpac/error.hpp"

namespace gpac {

namespace {

constexpr double kNormalizedTolerance = 1e-9;

void require_probability(const Spectrum& sp) {
  for (double p : sp.mass()) {
    if (p < 0.0) throw Error(Errc::NegativeMass, "entropy requires nonnegative mass");
  }
  const double total = total_mass(sp);
  if (std::fabs(total - 1.0) > kNormalizedTolerance) {
    throw Error(Errc::NotNormalized, "total mass " + std::to_string(total) + " is not 1");
  }
}

// |Phi| = count^tokens when it fits in 64 bits.
std::optional<std::uint64_t> exact_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

}  // namespace

Environment::Environment(std::string name, std::size_t token_width, std::uint64_t valid_count,
                         Validator validator)
    : name_(std::move(name)),
      token_width_(token_width),
      valid_count_(valid_count),
      validator_(std::move(validator)) {
  if (token_width_ == 0) throw Error(Errc::InvalidConfig, "token width must be at least 1");
  if (valid_count_ == 0) throw Error(Errc::InvalidConfig, "valid token count must be at least 1");
}

Environment Environment::alphabet(std::string name, std::string_view symbols) {
  std::set<char> distinct(symbols.begin(), symbols.end());
  const auto count = distinct.size();
  return Environment(std::move(name), 1, count, [distinct](std::string_view t) {
    return t.size() == 1 && distinct.count(t[0]) > 0;
  });
}

Environment Environment::from_tokens(std::string name, std::vector<std::string> tokens) {
  if (tokens.empty()) throw Error(Errc::InvalidConfig, "token list is empty");
  const std::size_t width = tokens.front().size();
  std::set<std::string, std::less<>> distinct;
  for (auto& t : tokens) {
    if (t.size() != width) throw Error(Errc::InvalidConfig, "tokens differ in width");
    distinct.insert(std::move(t));
  }
  const auto count = distinct.size();
  return Environment(std::move(name), width, count, [set = std::move(distinct)](std::string_view t) {
    return set.find(t) != set.end();
  });
}

Environment Environment::dna_base() { return alphabet("dna-base", "ACGT"); }

Environment Environment::dna_codon() {
  static constexpr std::string_view kBases = "ACGT";
  std::vector<std::string> codons;
  for (char a : kBases) {
    for (char b : kBases) {
      for (char c : kBases) {
        std::string codon{a, b, c};
        if (codon == "TAA" || codon == "TAG" || codon == "TGA") continue;
        codons.push_back(std::move(codon));
      }
    }
  }
  return from_tokens("dna-codon", std::move(codons));
}

bool Environment::accepts(std::string_view token) const {
  if (token.size() != token_width_) return false;
  return !validator_ || validator_(token);
}

WellFormedObject tokenize(std::string_view text, const Environment& env) {
  WellFormedObject obj{std::string(text), std::nullopt};
  const std::size_t w = env.token_width();
  if (text.size() % w != 0) return obj;
  std::vector<std::string> tokens;
  tokens.reserve(text.size() / w);
  for (std::size_t i = 0; i < text.size(); i += w) {
    const auto tok = text.substr(i, w);
    if (!env.accepts(tok)) return obj;
    tokens.emplace_back(tok);
  }
  obj.tokens = std::move(tokens);
  return obj;
}

InformationAmount string_information(std::string_view text, const Environment& env) {
  const auto obj = tokenize(text, env);
  if (obj.ill_formed()) return {0.0, true, 0};
  const std::size_t n = obj.tokens->size();
  return {static_cast<double>(n) * std::log2(static_cast<double>(env.valid_count())), false, n};
}

double interpreted_information(std::string_view text, const Environment& env,
                               std::uint64_t class_size) {
  const auto info = string_information(text, env);
  if (info.ill_formed) throw Error(Errc::IllFormedInput, "text is not well formed");
  if (class_size == 0) throw Error(Errc::ClassSizeOutOfRange, "class size must be at least 1");
  const auto phi = exact_power(env.valid_count(), info.token_count);
  // Without an exact |Phi| it exceeds 2^64 and therefore every class size.
  if (phi && class_size > *phi) {
    throw Error(Errc::ClassSizeOutOfRange, "class size exceeds the number of possible strings");
  }
  if (class_size == 1) return info.bits;
  if (phi && class_size == *phi) return 0.0;
  return info.bits - std::log2(static_cast<double>(class_size));
}

double origin_complexity(const Spectrum& sp, unsigned order) {
  const auto s = sp.scale().values();
  const auto m = sp.mass();
  std::vector<double> terms(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    terms[i] = std::pow(s[i], static_cast<double>(order)) * m[i];
  }
  return compensated_sum(terms);
}

double central_complexity(const Spectrum& sp, unsigned order) {
  const double c = origin_complexity(sp, 1);
  const auto s = sp.scale().values();
  const auto m = sp.mass();
  std::vector<double> terms(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    terms[i] = std::pow(s[i] - c, static_cast<double>(order)) * m[i];
  }
  return compensated_sum(terms);
}

double shannon_entropy(const Spectrum& sp) {
  require_probability(sp);
  std::vector<double> terms;
  terms.reserve(sp.size());
  for (double p : sp.mass()) {
    if (p > 0.0) terms.push_back(-p * std::log2(p));
  }
  return compensated_sum(terms);
}

Spectrum surprisal_spectrum(const Spectrum& sp) {
  require_probability(sp);
  std::map<double, std::vector<double>> by_surprisal;
  for (double p : sp.mass()) {
    if (p > 0.0) by_surprisal[-std::log2(p)].push_back(p);
  }
  std::vector<double> scale;
  std::vector<double> mass;
  for (const auto& [s, ps] : by_surprisal) {
    scale.push_back(s);
    mass.push_back(compensated_sum(ps));
  }
  return Spectrum(CardinalScale(std::move(scale)), std::move(mass));
}

double shannon_entropy_as_complexity(const Spectrum& sp) {
  return origin_complexity(surprisal_spectrum(sp), 1);
}

}  // namespace gpac
