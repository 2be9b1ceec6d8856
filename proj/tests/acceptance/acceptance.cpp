// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <gpac/gpac.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support/golden_cases.hpp"
#include "support/oracles.hpp"
#include "support/rows.hpp"

namespace {

using namespace gpac;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Spectrum uniform(std::size_t k) {
  return Spectrum(CardinalScale::ordinal(k), std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

Outcome dna_fixed_point() {
  Outcome o;
  const auto report = run_demo("dna");
  const double base = std::get<double>(report.values[1].second);
  const double codon = std::get<double>(report.values[2].second);
  o.require(base == 12.0, "base = " + fmt(base));
  o.require(std::fabs(codon - 11.861476) <= 1e-5, "codon = " + fmt(codon));
  // independent route: six bases are two codons over 61 sense codons
  o.require(std::fabs(codon - 2.0 * std::log2(61.0)) <= 1e-12, "codon vs 2 log2 61");
  o.require(report.passed(), "demo assertions");
  o.detail = o.ok ? "base " + fmt(base) + ", codon " + fmt(codon) : o.detail;
  return o;
}

Outcome shannon_reduction() {
  Outcome o;
  const Spectrum dyadic(CardinalScale::ordinal(4), {0.5, 0.25, 0.125, 0.125});
  const double h = shannon_entropy(dyadic);
  o.require(std::fabs(h - 1.75) <= 1e-12, "dyadic entropy " + fmt(h));
  o.require(std::fabs(h - shannon_entropy_as_complexity(dyadic)) <= 1e-12, "dyadic paths");
  for (unsigned k = 1; k <= 10; ++k) {
    const auto sp = uniform(std::size_t{1} << k);
    const double direct = shannon_entropy(sp);
    o.require(direct == static_cast<double>(k), "uniform 2^" + std::to_string(k) + " = " + fmt(direct));
    o.require(std::fabs(direct - shannon_entropy_as_complexity(sp)) <= 1e-12,
              "paths disagree at k = " + std::to_string(k));
  }
  if (o.ok) o.detail = "H = " + fmt(h) + ", uniform k = 1..10 exact";
  return o;
}

Outcome pac_bound_fixed_points() {
  Outcome o;
  const auto a = sample_bound(PacConfig(0.1, 0.05, 10));
  o.require(std::fabs(a.exact - 299.573) <= 1e-3, "(0.1,0.05,10) exact " + fmt(a.exact));
  o.require(std::fabs(a.exact - 299.573227355399099) <= 1e-9, "(0.1,0.05,10) vs oracle");
  o.require(a.required == 300, "required " + std::to_string(a.required));
  const auto b = sample_bound(PacConfig(0.5, 0.5, 1));
  o.require(std::fabs(b.exact - 2.7726) <= 1e-3, "(0.5,0.5,1) exact " + fmt(b.exact));
  o.require(std::fabs(b.exact - 2.772588722239781) <= 1e-9, "(0.5,0.5,1) vs oracle");

  const double eps[] = {0.05, 0.1, 0.2};
  const double del[] = {0.01, 0.05, 0.1};
  const std::uint64_t hs[] = {1, 10, 100};
  auto at = [&](int i, int j, int k) { return sample_bound(PacConfig(eps[i], del[j], hs[k])).exact; };
  int checks = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        if (i + 1 < 3) o.require(at(i + 1, j, k) < at(i, j, k), "not decreasing in epsilon"), ++checks;
        if (j + 1 < 3) o.require(at(i, j + 1, k) < at(i, j, k), "not decreasing in delta"), ++checks;
        if (k + 1 < 3) o.require(at(i, j, k + 1) > at(i, j, k), "not increasing in |H|"), ++checks;
      }
    }
  }
  if (o.ok) o.detail = "299.573/300, 2.7726, " + std::to_string(checks) + " monotone comparisons";
  return o;
}

// Brute force over every size-1 sample: does any outcome put all empirical
// means within epsilon of the true means?
bool some_single_draw_converges(const PacInstance& inst, double epsilon) {
  for (std::size_t x = 0; x < inst.domain().size(); ++x) {
    if (inst.weights()[x] == 0.0) continue;
    bool all_within = true;
    for (std::size_t h = 0; h < inst.hypotheses().size(); ++h) {
      all_within = all_within &&
                   std::fabs(inst.hypotheses()[h].values[x] - inst.true_mean(h)) <= epsilon;
    }
    if (all_within) return true;
  }
  return false;
}

Outcome pac_simulation_soundness() {
  Outcome o;
  const auto inst = PacInstance::bernoulli();
  o.require(inst.hypotheses().size() == 4, "|H| != 4");
  const PacConfig cfg(0.2, 0.1, 4);
  const auto t0 = Clock::now();
  const auto r = run_pac_simulation(inst, cfg, 55, 2000, 42);
  const double elapsed = seconds_since(t0);
  o.require(r.success_rate >= 0.9, "success_rate " + fmt(r.success_rate));
  o.require(elapsed < 5.0, "runtime " + fmt(elapsed) + " s");
  // analytic: P(|mean of 55 fair coins - 1/2| <= 0.2)
  const double analytic = oracle::bernoulli_half_within(55, 0.2);
  o.require(std::fabs(r.success_rate - analytic) <= 0.01, "rate vs analytic " + fmt(analytic));

  for (const auto& degenerate : {PacInstance::bernoulli(), PacInstance::bernoulli_identity()}) {
    o.require(!some_single_draw_converges(degenerate, 0.2), "a single draw can converge");
    const PacConfig c1(0.2, 0.1, degenerate.hypotheses().size());
    const auto d = run_pac_simulation(degenerate, c1, 1, 2000, 42);
    o.require(d.success_rate == 0.0, "m = 1 success_rate " + fmt(d.success_rate));
  }
  if (o.ok) {
    o.detail = "rate " + fmt(r.success_rate) + " in " + fmt(elapsed) + " s, m = 1 rate 0";
  }
  return o;
}

Outcome separability_agreement() {
  Outcome o;
  int disagreements = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          const CoefficientMatrix m(testing::mat2(a, b, c, d));
          const auto v = separability_test(m);
          const bool by_rank = v.kind == Separability::Separable;
          const bool by_det = determinant_separable(m);
          const bool by_oracle = oracle::elimination_rank({{double(a), double(b)}, {double(c), double(d)}}) <= 1;
          if (by_rank != by_det || by_rank != by_oracle || !v.criteria_agree) ++disagreements;
        }
  o.require(disagreements == 0, std::to_string(disagreements) + " of 625 disagree");

  const auto hg = separability_test(CoefficientMatrix(testing::mat2(1, 0, 0, 1)));
  o.require(hg.kind == Separability::Entangled && hg.determinant == 1.0, "identity not Entangled with det 1");
  const double s = 1.0 / std::sqrt(2.0);
  const auto singlet = separability_test(CoefficientMatrix(testing::mat2(0, s, -s, 0)));
  o.require(singlet.kind == Separability::Entangled, "singlet not Entangled");
  o.require(singlet.determinant && std::fabs(*singlet.determinant - 0.5) <= 1e-12, "singlet det");

  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int entangled = 0;
  for (int i = 0; i < 200; ++i) {
    Eigen::VectorXd x(dim(gen)), y(dim(gen));
    for (auto& e : x) e = u(gen);
    for (auto& e : y) e = u(gen);
    const auto v = separability_test(CoefficientMatrix(x * y.transpose()));
    if (v.kind != Separability::Separable) ++entangled;
  }
  o.require(entangled == 0, std::to_string(entangled) + " outer products called Entangled");
  if (o.ok) o.detail = "625/625 agree, fixed points hold, 200 outer products Separable";
  return o;
}

Outcome diagonal_construction() {
  Outcome o;
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_real_distribution<double> real(-5.0, 5.0);
  int built = 0;
  while (built < 1000) {
    Eigen::MatrixXd m(dim(gen), dim(gen));
    const bool integer = built % 2 == 0;
    for (auto i = 0; i < m.size(); ++i) m.data()[i] = integer ? small(gen) : real(gen);
    if ((m.array() == m(0, 0)).all()) continue;  // constant; covered below
    const auto g = construct_godel(CoefficientMatrix(m));
    std::set<double> values;
    for (std::size_t i = 0; i < g.output.rows(); ++i) {
      for (std::size_t j = 0; j < g.output.cols(); ++j) {
        if (g.output(i, j) == m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) {
          o.require(false, "agreement at case " + std::to_string(built));
        }
        values.insert(g.output(i, j));
      }
    }
    o.require(values.size() <= 2, "more than two output values at case " + std::to_string(built));
    ++built;
  }
  for (int n = 1; n <= 6; ++n) {
    try {
      (void)construct_godel(CoefficientMatrix(Eigen::MatrixXd::Constant(n, n + 1, 1.5)));
      o.require(false, "constant matrix accepted");
    } catch (const Error& e) {
      o.require(e.code() == Errc::AllEqual, "wrong error for constant matrix");
    }
  }
  if (o.ok) o.detail = "1000 matrices disagree everywhere, constants raise AllEqual";
  return o;
}

Outcome dimension_formula() {
  Outcome o;
  for (unsigned n = 0; n <= 16; ++n) {
    const auto e = enumerate_entangled_dimension(n);
    o.require(e.count == godel_dimension(n), "n = " + std::to_string(n) + ": " +
                                                 std::to_string(e.count) + " vs " +
                                                 std::to_string(godel_dimension(n)));
    o.require(e.verified, "generators not verified at n = " + std::to_string(n));
    o.require(e.count == oracle::subsets_of_size_at_least_two(n), "binomial oracle at n = " + std::to_string(n));
  }
  const std::pair<unsigned, std::uint64_t> listed[] = {{2, 1}, {3, 4}, {4, 11}, {5, 26}, {6, 57}};
  for (const auto& [n, dim] : listed) {
    o.require(godel_dimension(n) == dim, "listed value at n = " + std::to_string(n));
  }
  o.require(godel_dimension(16) == 65519, "n = 16 gives " + std::to_string(godel_dimension(16)));
  if (o.ok) o.detail = "n = 0..16 enumerated and verified, dim(16) = 65519";
  return o;
}

Eigen::MatrixXd random_matrix(std::mt19937_64& gen, Eigen::Index r, Eigen::Index c) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Eigen::MatrixXd m(r, c);
  for (auto i = 0; i < m.size(); ++i) m.data()[i] = u(gen);
  return m;
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Outcome round_trips_and_algebra() {
  Outcome o;
  std::mt19937_64 gen(500);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> mass(0.01, 1.0);
  double worst_round_trip = 0.0, worst_algebra = 0.0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = static_cast<std::size_t>(dim(gen));
    std::vector<double> m(k);
    for (auto& x : m) x = mass(gen) * (i % 2 == 0 ? 1.0 : -1.0);
    const Spectrum sp(CardinalScale::ordinal(k), m);
    const auto w = to_wave(sp);
    const auto back = from_wave(w.lambda, w.wave, sp.scale());
    for (std::size_t j = 0; j < k; ++j) {
      worst_round_trip = std::max(worst_round_trip, std::fabs(back.mass()[j] - sp.mass()[j]));
    }
    o.require(negate(negate(sp)) == sp, "negation not an involution at case " + std::to_string(i));

    const auto r = dim(gen), c = dim(gen), q = dim(gen), p = dim(gen);
    const Interpreter h1("h1", random_matrix(gen, r, c)), h2("h2", random_matrix(gen, r, c));
    const Interpreter g("g", random_matrix(gen, dim(gen), dim(gen)));
    const std::vector<double> ab{coef(gen), coef(gen)};
    const std::vector<Interpreter> hs{h1, h2};
    const std::vector<Interpreter> left{tensor(h1, g), tensor(h2, g)};
    const std::vector<Interpreter> right{tensor(g, h1), tensor(g, h2)};
    worst_algebra = std::max({worst_algebra,
                              max_abs_diff(tensor(linear_combine(ab, hs), g).matrix(),
                                           linear_combine(ab, left).matrix()),
                              max_abs_diff(tensor(g, linear_combine(ab, hs)).matrix(),
                                           linear_combine(ab, right).matrix())});

    const Interpreter x("x", random_matrix(gen, q, r)), z("z", random_matrix(gen, c, p));
    worst_algebra = std::max(worst_algebra, max_abs_diff(compose(compose(x, h1), z).matrix(),
                                                         compose(x, compose(h1, z)).matrix()));

    std::vector<double> u(static_cast<std::size_t>(c)), v(u.size()), uv(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
      u[j] = coef(gen);
      v[j] = coef(gen);
      uv[j] = ab[0] * u[j] + ab[1] * v[j];
    }
    const auto combo = gpac::apply(linear_combine(ab, hs), u);
    const auto mixed = gpac::apply(h1, uv);
    const auto h1u = gpac::apply(h1, u), h2u = gpac::apply(h2, u), h1v = gpac::apply(h1, v);
    for (std::size_t j = 0; j < combo.size(); ++j) {
      worst_algebra = std::max({worst_algebra,
                                std::fabs(combo.mass()[j] - (ab[0] * h1u.mass()[j] + ab[1] * h2u.mass()[j])),
                                std::fabs(mixed.mass()[j] - (ab[0] * h1u.mass()[j] + ab[1] * h1v.mass()[j]))});
    }
  }
  o.require(worst_round_trip <= 1e-12, "round trip error " + fmt(worst_round_trip));
  o.require(worst_algebra <= 1e-12, "algebra error " + fmt(worst_algebra));
  if (o.ok) {
    o.detail = "500 cases, round trip " + fmt(worst_round_trip) + ", algebra " + fmt(worst_algebra);
  }
  return o;
}

Outcome completeness_checks() {
  Outcome o;
  const std::vector<double> info{1.0, 2.0};
  const auto single = check_completeness(InterpreterSpace({Interpreter::identity(2)}), info);
  o.require(single.complete, "single-axiom basis not Complete");
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto pair = check_completeness(
      InterpreterSpace({Interpreter::identity(2), Interpreter("swap", swap)}), info);
  o.require(pair.complete, "{identity, swap} not Complete");
  const auto doubled = check_completeness(
      InterpreterSpace({Interpreter::identity(2),
                        Interpreter("2I", 2.0 * Eigen::MatrixXd::Identity(2, 2))}),
      info);
  o.require(!doubled.complete, "{identity, 2 identity} not Incomplete");
  o.require(doubled.witness == std::optional<std::size_t>{1}, "witness is not the second element");

  std::mt19937_64 gen(100);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> mag(0.01, 100.0);
  int incomplete = 0;
  for (int i = 0; i < 100; ++i) {
    const auto n = size(gen), in = size(gen), out = size(gen);
    std::vector<Interpreter> basis;
    for (int b = 0; b < n; ++b) {
      // every third case repeats a scaled earlier element to force dependence
      if (b > 0 && i % 3 == 0 && b == n - 1) {
        basis.emplace_back("dep", 0.5 * basis.front().matrix());
      } else {
        basis.emplace_back("b" + std::to_string(b), random_matrix(gen, out, in));
      }
    }
    std::vector<double> x(static_cast<std::size_t>(in));
    for (auto& e : x) e = u(gen);
    const double scale = mag(gen) * (i % 2 == 0 ? 1.0 : -1.0);
    std::vector<double> scaled(x);
    for (auto& e : scaled) e *= scale;
    const InterpreterSpace space(basis);
    const auto a = check_completeness(space, x), b = check_completeness(space, scaled);
    o.require(a.complete == b.complete && a.witness == b.witness && a.image_rank == b.image_rank,
              "verdict changed under scaling at case " + std::to_string(i));
    incomplete += a.complete ? 0 : 1;
  }
  if (o.ok) {
    o.detail = "fixed points hold, 100 scaled cases invariant (" + std::to_string(incomplete) +
               " incomplete)";
  }
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  int compared = 0;
  for (const auto& c : testing::golden_cases()) {
    const auto args = testing::resolve(c.args, GPAC_DATA_DIR);
    std::ostringstream out1, out2, err;
    const int code1 = cli::dispatch(args, out1, err, {false});
    const int code2 = cli::dispatch(args, out2, err, {false});
    o.require(code1 == 0 && code2 == 0, c.name + " exited nonzero: " + err.str());
    o.require(out1.str() == out2.str(), c.name + " differs between runs");
    const auto golden = std::filesystem::path(GPAC_GOLDEN_DIR) / (c.name + ".out");
    o.require(std::filesystem::exists(golden), c.name + " has no golden file");
    o.require(out1.str() == testing::slurp(golden), c.name + " differs from golden file");
    ++compared;
  }
  std::set<std::string> covered;
  for (const auto& c : testing::golden_cases()) {
    for (const auto& a : c.args) {
      if (!a.starts_with("-") && !a.starts_with("@")) {
        covered.insert(a);
        break;
      }
    }
  }
  for (const char* sub : {"info", "complexity", "entropy", "pac-bound", "pac-sim", "separable",
                          "godel-construct", "godel-dim", "completeness", "demo"}) {
    o.require(covered.contains(sub), std::string("no golden case for ") + sub);
  }
  if (o.ok) o.detail = std::to_string(compared) + " cases byte-identical over two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"dna fixed point", dna_fixed_point},
      {"shannon reduction", shannon_reduction},
      {"pac bound fixed points", pac_bound_fixed_points},
      {"pac simulation soundness", pac_simulation_soundness},
      {"separability oracle agreement", separability_agreement},
      {"diagonal construction", diagonal_construction},
      {"dimension formula", dimension_formula},
      {"round trips and algebra", round_trips_and_algebra},
      {"completeness checks", completeness_checks},
      {"cli determinism", cli_determinism},
  };
  const auto start = Clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s AC%zu %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), seconds_since(t0));
  }
  const double total = seconds_since(start);
  const bool in_time = total < 60.0;
  std::printf("%s total runtime %.2fs (limit 60s)\n", in_time ? "PASS" : "FAIL", total);
  return failures == 0 && in_time ? 0 : 1;
}
