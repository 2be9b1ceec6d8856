#include "gpac/demos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gpac/complexity.hpp"
#include "gpac/error.hpp"
#include "gpac/godel.hpp"
#include "gpac/pac.hpp"
#include "gpac/spectra.hpp"

namespace gpac {

namespace {

CoefficientMatrix two_by_two(double a, double b, double c, double d,
                             std::vector<std::string> rows = {"B", "notB"},
                             std::vector<std::string> cols = {"A", "notA"}) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return CoefficientMatrix(std::move(m), std::move(rows), std::move(cols));
}

DemoReport dna_demo() {
  DemoReport r{"dna", {}, {}, {}};
  const std::string sequence = "GCAGCG";
  const double base = string_information(sequence, Environment::dna_base()).bits;
  const double codon = string_information(sequence, Environment::dna_codon()).bits;
  r.values = {{"sequence", sequence}, {"base", base}, {"codon", codon}};
  r.assertions = {{"base_is_12", base == 12.0},
                  {"codon_is_2log2_61", std::fabs(codon - 11.861476) <= 1e-5}};
  r.narrative = {"dna-base reads G-C-A-G-C-G: 6 tokens over 4 nucleotides, log2 4^6 bits",
                 "dna-codon reads GCA-GCG: 2 tokens over 61 sense codons, log2 61^2 bits",
                 "the same object carries different information under different environments"};
  return r;
}

DemoReport shannon_demo() {
  DemoReport r{"shannon", {}, {}, {}};
  const Spectrum p(CardinalScale({1, 2, 3, 4}), {0.5, 0.25, 0.125, 0.125});
  const double direct = shannon_entropy(p);
  const double as_complexity = shannon_entropy_as_complexity(p);
  r.values = {{"entropy", direct}, {"entropy_as_complexity", as_complexity}};
  r.assertions = {{"entropy_is_1.75", std::fabs(direct - 1.75) <= 1e-12},
                  {"paths_agree", std::fabs(direct - as_complexity) <= 1e-12}};
  r.narrative = {"p = (1/2, 1/4, 1/8, 1/8)",
                 "entropy = first origin complexity of the spectrum placing mass p_i at -log2 p_i"};
  return r;
}

DemoReport epr_demo() {
  DemoReport r{"epr", {}, {}, {}};
  const double h = 1.0 / std::numbers::sqrt2;
  const auto singlet = separability_test(two_by_two(0.0, h, -h, 0.0, {"up_e", "down_e"},
                                                    {"up_p", "down_p"}));
  Eigen::Vector2d u(0.6, 0.8);
  Eigen::Vector2d v(0.8, -0.6);
  const auto product = separability_test(CoefficientMatrix(u * v.transpose()));
  const auto godel = separability_test(two_by_two(1, 0, 0, 1));
  const auto godel_prime = separability_test(two_by_two(0, 1, 1, 0));

  r.values = {{"singlet_determinant", *singlet.determinant},
              {"singlet_rank", static_cast<double>(singlet.numeric_rank)},
              {"product_rank", static_cast<double>(product.numeric_rank)},
              {"godel_determinant", *godel.determinant},
              {"godel_prime_determinant", *godel_prime.determinant}};
  r.assertions = {
      {"singlet_entangled", singlet.kind == Separability::Entangled},
      {"singlet_determinant_is_0.5", std::fabs(*singlet.determinant - 0.5) <= 1e-12},
      {"product_separable", product.kind == Separability::Separable},
      {"godel_entangled", godel.kind == Separability::Entangled},
      {"godel_prime_entangled", godel_prime.kind == Separability::Entangled},
      {"godel_prime_determinant_is_-1", *godel_prime.determinant == -1.0},
  };
  r.narrative = {
      "singlet (up(x)down - down(x)up)/sqrt2 has no product form: det 0.5",
      "outer(u, v) with u = (0.6, 0.8), v = (0.8, -0.6) is a product state",
      "S_Godel = B(x)A + notB(x)notA = [[1,0],[0,1]] is entangled (det 1)",
      "S'_Godel = B(x)notA + notB(x)A = [[0,1],[1,0]] is entangled (det -1)",
  };
  return r;
}

DemoReport cantor_demo(const DemoOptions& options) {
  DemoReport r{"cantor", {}, {}, {}};
  const std::vector<std::string> lines =
      options.cantor_lines.value_or(std::vector<std::string>{"123", "456", "789"});
  const std::string diagonal = cantor_diagonal(lines);
  r.values = {{"diagonal", diagonal}, {"lines", static_cast<double>(lines.size())}};
  bool all_differ = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    all_differ = all_differ && diagonal[i] != lines[i][i];
  }
  r.assertions = {
      {"differs_from_every_line", all_differ},
      {"not_in_list", std::none_of(lines.begin(), lines.end(), [&](const std::string& l) {
         return l.substr(0, diagonal.size()) == diagonal;
       })}};
  r.narrative = {"digit i of the output disagrees with digit i of line i",
                 "the listed strings play the rows of lambda; the output plays mu"};
  return r;
}

DemoReport turing_demo() {
  DemoReport r{"turing", {}, {}, {}};
  const auto m = two_by_two(1, 0, 0, 1, {"B: halt->never-halt", "notB: never-halt->halt"},
                            {"A: halts", "notA: never halts"});
  const auto verdict = separability_test(m);
  const auto diagonal = construct_godel(m);
  r.values = {{"determinant", *verdict.determinant},
              {"rank", static_cast<double>(verdict.numeric_rank)},
              {"swap_value", diagonal.swap_value}};
  r.assertions = {{"entangled", verdict.kind == Separability::Entangled}};
  r.narrative = {
      "rows: " + m.row_labels()[0] + " | " + m.row_labels()[1],
      "cols: " + m.col_labels()[0] + " | " + m.col_labels()[1],
      "S_Godel = B(x)A + notB(x)notA: let the halting ones never halt and the rest halt",
      "undecidable instance: no product interpreter H1(x)H2 reproduces it",
      "with rows read as first-order procedures and cols as Peano-derivable/not, the same "
      "[[1,0],[0,1]] coefficients give the arithmetic incompleteness instance",
  };
  return r;
}

DemoReport pac_demo() {
  DemoReport r{"pac", {}, {}, {}};
  const auto bound = sample_bound(PacConfig(0.1, 0.05, 10));
  const PacConfig cfg(0.2, 0.1, 4);
  const auto sim_bound = sample_bound(cfg);
  const auto report = run_pac_simulation(PacInstance::bernoulli(), cfg, 55, 2000, 42);
  r.values = {{"bound_exact", bound.exact},
              {"bound_required", static_cast<double>(bound.required)},
              {"sim_required", static_cast<double>(sim_bound.required)},
              {"success_rate", report.success_rate},
              {"successes", static_cast<double>(report.successes)}};
  r.assertions = {{"required_is_300", bound.required == 300},
                  {"sim_required_is_55", sim_bound.required == 55},
                  {"simulation_passed", report.passed}};
  r.narrative = {"N = ln(2|H|/delta) / (2 eps^2)",
                 "Bernoulli(0.5) over {0,1}; hypotheses x, 1-x, 1/2, x/2; eps 0.2, delta 0.1",
                 "2000 trials of 55 draws, seed 42; success = every hypothesis within eps"};
  return r;
}

}  // namespace

bool DemoReport::passed() const noexcept {
  return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.second; });
}

const std::vector<std::string_view>& demo_names() {
  static const std::vector<std::string_view> names{"dna", "shannon", "epr", "cantor", "turing", "pac"};
  return names;
}

std::string cantor_diagonal(const std::vector<std::string>& lines) {
  if (lines.empty()) throw Error(Errc::InvalidConfig, "cantor needs at least one line");
  const std::size_t width = lines.front().size();
  for (const auto& l : lines) {
    if (l.size() != width) throw Error(Errc::InvalidConfig, "cantor lines differ in length");
    if (!std::all_of(l.begin(), l.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(Errc::InvalidConfig, "cantor line '" + l + "' is not all digits");
    }
  }
  if (width < lines.size()) {
    throw Error(Errc::InvalidConfig, "cantor lines need at least as many digits as lines");
  }
  std::string out(lines.size(), '0');
  for (std::size_t i = 0; i < lines.size(); ++i) out[i] = lines[i][i] != '0' ? '0' : '1';
  return out;
}

DemoReport run_demo(std::string_view name, const DemoOptions& options) {
  if (name == "dna") return dna_demo();
  if (name == "shannon") return shannon_demo();
  if (name == "epr") return epr_demo();
  if (name == "cantor") return cantor_demo(options);
  if (name == "turing") return turing_demo();
  if (name == "pac") return pac_demo();
  throw Error(Errc::UnknownDemo, "no demo named '" + std::string(name) + "'");
}

}  // namespace gpac
