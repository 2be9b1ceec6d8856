#include "cli.hpp"

#include <charconv>
#include <cstdint>
#include <exception>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "gpac/gpac.hpp"

namespace gpac::cli {

namespace {

struct GlobalFlags {
  std::string format = "json";
  double tol = kRankTolerance;
  std::uint64_t seed = 0;
};

// Input problems that are not gpac::Error (bad flag values etc.).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t parse_positive(std::string_view text, std::string_view field) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw InputError("--env: " + std::string(field) + " must be a positive integer");
  }
  return v;
}

Environment parse_environment(const std::string& spec) {
  if (spec == "dna-codon") return Environment::dna_codon();
  if (spec == "dna-base") return Environment::dna_base();
  std::string name = "custom";
  std::optional<std::uint64_t> width;
  std::optional<std::uint64_t> count;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("--env: expected key=value, got '" + std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "name") {
      name = std::string(value);
    } else if (key == "width") {
      width = parse_positive(value, "width");
    } else if (key == "count") {
      count = parse_positive(value, "count");
    } else {
      throw InputError("--env: unknown key '" + std::string(key) + "'");
    }
  }
  if (!width || !count) throw InputError("--env: width and count are required");
  return Environment(name, *width, *count);
}

// Re-raises library errors on file data with the file name in front.
template <class F>
auto on_file(const std::string& path, std::string_view field, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::Parse) throw;
    throw Error(e.code(), path + ": " + std::string(field) + ": " + e.what());
  }
}

Json info_cmd(const std::string& text, const std::string& env_spec,
              std::optional<std::uint64_t> class_size) {
  const Environment env = parse_environment(env_spec);
  const auto amount = string_information(text, env);
  Json j;
  j["command"] = "info";
  j["env"] = {{"name", env.name()}, {"width", env.token_width()}, {"count", env.valid_count()}};
  j["text"] = text;
  j["tokens"] = amount.token_count;
  j["bits"] = amount.bits;
  j["ill_formed"] = amount.ill_formed;
  if (class_size) {
    j["class_size"] = *class_size;
    j["interpreted_bits"] = interpreted_information(text, env, *class_size);
  }
  return j;
}

Json complexity_cmd(const std::string& file, unsigned order, bool central) {
  const Spectrum sp = io::read_spectrum_file(file);
  Json j;
  j["command"] = "complexity";
  j["order"] = order;
  j["central"] = central;
  j["points"] = sp.size();
  j["total_mass"] = total_mass(sp);
  j["value"] = central ? central_complexity(sp, order) : origin_complexity(sp, order);
  j["truth"] = std::string(to_string(classify_truth(sp)));
  j["gpac_normalizable"] = gpac_normalizable(sp);
  return j;
}

Json entropy_cmd(const std::string& file) {
  const Spectrum sp = io::read_spectrum_file(file);
  const double direct = on_file(file, "mass", [&] { return shannon_entropy(sp); });
  const double via = on_file(file, "mass", [&] { return shannon_entropy_as_complexity(sp); });
  Json j;
  j["command"] = "entropy";
  j["points"] = sp.size();
  j["entropy"] = direct;
  j["entropy_as_complexity"] = via;
  j["paths_agree"] = std::fabs(direct - via) <= 1e-12;
  return j;
}

Json pac_bound_cmd(double epsilon, double delta, std::uint64_t hypotheses) {
  const auto b = sample_bound(PacConfig(epsilon, delta, hypotheses));
  Json j;
  j["command"] = "pac-bound";
  j["epsilon"] = epsilon;
  j["delta"] = delta;
  j["hypotheses"] = hypotheses;
  j["exact"] = b.exact;
  j["required"] = b.required;
  return j;
}

Json pac_sim_cmd(const std::string& file, double epsilon, double delta, std::uint64_t m,
                 std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  auto raw = io::read_pac_instance_file(file);
  const auto rescale = rescale_to_unit(raw.hypotheses);
  const PacInstance inst = on_file(file, "instance", [&] {
    return PacInstance(raw.domain, raw.weights, raw.hypotheses);
  });
  if (inst.hypotheses().empty()) {
    throw Error(Errc::EmptyHypothesisSet, file + ": hypotheses: no hypothesis lines");
  }
  const PacConfig cfg(epsilon, delta, inst.hypotheses().size());
  const auto r = run_pac_simulation(inst, cfg, m, trials, seed, threads);
  Json j;
  j["command"] = "pac-sim";
  j["hypotheses"] = inst.hypotheses().size();
  j["domain_size"] = inst.domain().size();
  j["rescale"] = {{"applied", rescale.applied()},
                  {"offset", rescale.offset},
                  {"factor", rescale.factor}};
  j["epsilon"] = epsilon;
  j["delta"] = delta;
  j["seed"] = seed;
  j["sample_size"] = r.sample_size;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["success_rate"] = r.success_rate;
  j["bound"] = r.bound;
  j["required"] = r.required;
  j["passed"] = r.passed;
  j["best_hypothesis"] = inst.hypotheses()[r.best_hypothesis].name;
  j["erm_agreement"] = r.erm_agreement;
  return j;
}

Json verdict_json(const SeparabilityVerdict& v) {
  Json j;
  j["kind"] = std::string(to_string(v.kind));
  j["rank"] = v.numeric_rank;
  j["singular_values"] = v.singular_values;
  if (v.determinant) j["determinant"] = *v.determinant;
  j["criteria_agree"] = v.criteria_agree;
  return j;
}

Json separable_cmd(const std::string& file, double tol) {
  const CoefficientMatrix m(io::read_matrix_file(file));
  Json j;
  j["command"] = "separable";
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["tol"] = tol;
  j.update(verdict_json(separability_test(m, tol)));
  return j;
}

Json godel_construct_cmd(const std::string& file, double tol) {
  const CoefficientMatrix m(io::read_matrix_file(file));
  const auto g = on_file(file, "matrix", [&] { return construct_godel(m); });
  Json j;
  j["command"] = "godel-construct";
  j["pivot"] = g.pivot;
  j["swap_value"] = g.swap_value;
  j["input"] = matrix_json(g.input.entries());
  j["output"] = matrix_json(g.output.entries());
  bool disagrees = true;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) disagrees = disagrees && g.output(r, c) != m(r, c);
  }
  j["disagrees_everywhere"] = disagrees;
  j["input_kind"] = std::string(to_string(separability_test(g.input, tol).kind));
  j["output_kind"] = std::string(to_string(separability_test(g.output, tol).kind));
  return j;
}

Json godel_dim_cmd(unsigned n, bool enumerate, unsigned threads) {
  Json j;
  j["command"] = "godel-dim";
  j["n"] = n;
  j["closed_form"] = godel_dimension(n);
  if (enumerate) {
    const auto e = enumerate_entangled_dimension(n, threads);
    j["enumerated"] = e.count;
    j["verified"] = e.verified;
  }
  return j;
}

Json completeness_cmd(const std::vector<std::string>& files, const std::string& info_text) {
  std::vector<Interpreter> basis;
  for (const auto& f : files) basis.emplace_back(f, io::read_matrix_file(f));
  const auto info = io::parse_number_list(info_text, "--info");
  const InterpreterSpace space(std::move(basis));
  const auto v = check_completeness(space, info);
  Json j;
  j["command"] = "completeness";
  j["basis_size"] = space.dimension();
  j["image_rank"] = v.image_rank;
  j["complete"] = v.complete;
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

Json demo_cmd(const std::string& name, const std::optional<std::string>& lines) {
  DemoOptions opts;
  if (lines) {
    std::vector<std::string> split;
    std::string_view rest = *lines;
    while (true) {
      const auto comma = rest.find(',');
      split.emplace_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    opts.cantor_lines = std::move(split);
  }
  const auto report = run_demo(name, opts);
  Json j;
  j["command"] = "demo";
  j["name"] = report.name;
  j["passed"] = report.passed();
  Json values = Json::object();
  for (const auto& [k, v] : report.values) {
    std::visit([&values, &k](const auto& x) { values[k] = x; }, v);
  }
  j["values"] = std::move(values);
  Json assertions = Json::object();
  for (const auto& [k, ok] : report.assertions) assertions[k] = ok;
  j["assertions"] = std::move(assertions);
  j["narrative"] = report.narrative;
  return j;
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err,
             const DispatchOptions& options) {
  CLI::App app{"Interpreter complexity, PAC bounds and tensor incompleteness checks", "gpac"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--format", g.format, "Output encoding")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", g.tol, "Relative singular-value cutoff")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for Monte-Carlo commands");

  std::function<Json()> run;

  std::string text;
  std::string env_spec;
  std::optional<std::uint64_t> class_size;
  auto* info = app.add_subcommand("info", "Information amount of a string in an environment");
  info->add_option("--text", text, "Object to measure")->required();
  info->add_option("--env", env_spec, "dna-codon | dna-base | name=L,width=W,count=N")->required();
  info->add_option("--class-size", class_size, "Interpretation class size");
  info->callback([&] { run = [&] { return info_cmd(text, env_spec, class_size); }; });

  std::string spectrum_file;
  unsigned order = 1;
  bool central = false;
  auto* cx = app.add_subcommand("complexity", "Origin or central complexity of a spectrum");
  cx->add_option("--spectrum", spectrum_file, "s,mass CSV file")->required();
  cx->add_option("--order", order, "Moment order");
  cx->add_flag("--central", central, "Central instead of origin moment");
  cx->callback([&] { run = [&] { return complexity_cmd(spectrum_file, order, central); }; });

  auto* ent = app.add_subcommand("entropy", "Shannon entropy of a normalized spectrum");
  ent->add_option("--spectrum", spectrum_file, "s,mass CSV file")->required();
  ent->callback([&] { run = [&] { return entropy_cmd(spectrum_file); }; });

  double epsilon = 0.0;
  double delta = 0.0;
  std::uint64_t hypotheses = 0;
  auto* pb = app.add_subcommand("pac-bound", "Sample size ln(2|H|/delta)/(2 eps^2)");
  pb->add_option("--epsilon", epsilon)->required();
  pb->add_option("--delta", delta)->required();
  pb->add_option("--hypotheses", hypotheses)->required();
  pb->callback([&] { run = [&] { return pac_bound_cmd(epsilon, delta, hypotheses); }; });

  std::string instance_file;
  std::uint64_t m = 0;
  std::uint64_t trials = 0;
  unsigned threads = 1;
  auto* ps = app.add_subcommand("pac-sim", "Monte-Carlo check of the uniform-convergence event");
  ps->add_option("--instance", instance_file, "Instance file")->required();
  ps->add_option("--epsilon", epsilon)->required();
  ps->add_option("--delta", delta)->required();
  ps->add_option("--m", m, "Sample size per trial")->required();
  ps->add_option("--trials", trials, "Number of trials")->required();
  ps->add_option("--threads", threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  ps->callback([&] {
    run = [&] { return pac_sim_cmd(instance_file, epsilon, delta, m, trials, g.seed, threads); };
  });

  std::string matrix_file;
  auto* sep = app.add_subcommand("separable", "Product-form test of a coefficient matrix");
  sep->add_option("--matrix", matrix_file, "Matrix CSV file")->required();
  sep->callback([&] { run = [&] { return separable_cmd(matrix_file, g.tol); }; });

  auto* gc = app.add_subcommand("godel-construct", "Diagonal construction on a coefficient matrix");
  gc->add_option("--matrix", matrix_file, "Matrix CSV file")->required();
  gc->callback([&] { run = [&] { return godel_construct_cmd(matrix_file, g.tol); }; });

  unsigned n = 0;
  bool enumerate = false;
  auto* gd = app.add_subcommand("godel-dim", "Dimension 2^n - n - 1 of the entangled part");
  gd->add_option("--n", n, "Interpreter space dimension")->required();
  gd->add_flag("--enumerate", enumerate, "Cross-check by subset enumeration");
  gd->add_option("--threads", threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  gd->callback([&] { run = [&] { return godel_dim_cmd(n, enumerate, threads); }; });

  std::vector<std::string> basis_files;
  std::string info_vector;
  auto* cp = app.add_subcommand("completeness", "Independence of basis images of one input");
  cp->add_option("--basis", basis_files, "Interpreter matrix CSV (repeatable)")->required();
  cp->add_option("--info", info_vector, "Comma-separated information vector")->required();
  cp->callback([&] { run = [&] { return completeness_cmd(basis_files, info_vector); }; });

  std::string demo_name;
  std::optional<std::string> lines;
  auto* dm = app.add_subcommand("demo", "Run a preconfigured demonstration");
  dm->add_option("name", demo_name, "dna | shannon | epr | cantor | turing | pac")->required();
  dm->add_option("--lines", lines, "cantor: comma-separated digit strings");
  dm->callback([&] { run = [&] { return demo_cmd(demo_name, lines); }; });

  std::vector<const char*> argv{"gpac"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gpac: error: " << e.what() << '\n';
    return kInvalidInput;
  }

  Json payload;
  try {
    payload = run();
  } catch (const Error& e) {
    err << "gpac: error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InputError& e) {
    err << "gpac: error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "gpac: internal error: " << e.what() << '\n';
    return kInternal;
  }

  if (g.format == "text") {
    out << render_text(payload, options.color);
  } else {
    out << payload.dump() << '\n';
  }
  if (payload.value("command", "") == "demo" && !payload.value("passed", false)) {
    err << "gpac: demo assertions failed\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace gpac::cli
