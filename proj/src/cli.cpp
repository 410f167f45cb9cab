#include "filippov/cli.hpp"

#include "filippov/constructions.hpp"
#include "filippov/cube.hpp"
#include "filippov/extendder.hpp"
#include "filippov/io.hpp"
#include "filippov/repmod.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace filippov::cli {

namespace {

using io::Json;

struct Fact {
  std::string key;
  Json value;
};

struct Section {
  std::string input;
  std::vector<CheckReport> checks;
  std::vector<Fact> facts;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
  }
  void fact(std::string key, Json value) { facts.push_back({std::move(key), std::move(value)}); }
};

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::make, "make"},
    {Command::validate, "validate"},
    {Command::derivations, "derivations"},
    {Command::check_extension, "check-extension"},
    {Command::extend, "extend"},
    {Command::cube, "cube"},
    {Command::rep_check, "rep-check"},
};

std::string join_indices(const std::vector<std::size_t>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) out += (i ? ", " : "") + std::to_string(tuple[i]);
  return out + ")";
}

std::string render_vector(std::span<const Scalar> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_scalar(v[i]);
  return out + "]";
}

/// Facts render as compact JSON without the quotes around strings; every
/// string fact is a label or a rational, so nothing becomes ambiguous.
std::string render_fact(const Json& value) {
  std::string out = value.dump();
  std::erase(out, '"');
  return out;
}

void render_check(std::ostringstream& out, const CheckReport& c) {
  out << c.name << ": " << (c.passed ? "pass" : "fail") << " (" << c.tuples_checked
      << (c.tuples_checked == 1 ? " tuple" : " tuples");
  if (!c.passed) out << ", " << c.violations << (c.violations == 1 ? " violation" : " violations");
  out << ")\n";
  for (const auto& w : c.witnesses) {
    out << "  " << w.identity;
    if (!w.tuple.empty()) out << " at " << join_indices(w.tuple);
    if (!w.lhs.empty() || !w.rhs.empty()) out << ": lhs " << render_vector(w.lhs) << " rhs " << render_vector(w.rhs);
    out << "\n";
  }
}

std::string render(const RunConfig& config, const std::vector<Section>& sections) {
  const bool passed =
      std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.passed(); });
  if (config.format == ReportFormat::json) {
    Json doc{{"command", command_name(config.command)}, {"passed", passed}};
    Json list = Json::array();
    for (const auto& s : sections) {
      Json checks = Json::array();
      for (const auto& c : s.checks) checks.push_back(io::report_to_json(c));
      Json facts = Json::object();
      for (const auto& f : s.facts) facts[f.key] = f.value;
      list.push_back({{"input", s.input}, {"passed", s.passed()}, {"checks", std::move(checks)}, {"facts", std::move(facts)}});
    }
    doc["sections"] = std::move(list);
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& s : sections) {
    if (sections.size() > 1) out << "== " << s.input << "\n";
    for (const auto& c : s.checks) render_check(out, c);
    for (const auto& f : s.facts) out << f.key << ": " << render_fact(f.value) << "\n";
  }
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot open for writing");
  out << text;
}

void require_inputs(const RunConfig& config, std::size_t at_least, const char* what) {
  if (config.inputs.size() < at_least) throw InputError(std::string(command_name(config.command)) + ": expected " + what);
}

CheckOptions options_of(const RunConfig& config) { return CheckOptions{config.witness_cap, config.jobs}; }

Json maps_to_json(const std::vector<LinearMap>& maps) {
  Json out = Json::array();
  for (const auto& m : maps) out.push_back(io::matrix_to_json(m.matrix()));
  return out;
}

// ---- commands -------------------------------------------------------------

Json make_fixture(const RunConfig& config) {
  const std::string& name = config.fixture;
  auto dim_or = [&](std::size_t fallback) { return config.fixture_dim ? config.fixture_dim : fallback; };
  if (name == "abelian") return io::algebra_to_json(abelian(dim_or(3)));
  if (name == "simple4") return io::algebra_to_json(simple4());
  if (name == "gl-trace") return io::algebra_to_json(gl_trace_form(dim_or(2)));
  if (name == "metric-so3") return io::algebra_to_json(metric_lie_extension(so3(), MetricForm(Matrix::identity(3))));
  if (name == "lie-functional-so3") return io::algebra_to_json(lie_functional_so3());
  if (name == "lie-functional-heisenberg") return io::algebra_to_json(lie_functional_heisenberg());
  if (name == "heisenberg-like-spec") {
    StructureTable mu;
    mu[{0, 1, 2}] = Vector{1};
    return io::spec_to_json(
        ExtensionSpec(abelian(3), abelian(1), TriMapToH(3, 1, mu), PairAction(3, 1), MixedAction(3, 1)));
  }
  throw InputError("make: unknown fixture '" + name + "'");
}

RunResult run_make(const RunConfig& config) {
  std::string text = make_fixture(config).dump(2) + "\n";
  if (!config.output) return {0, std::move(text)};
  write_file(*config.output, text);
  return {0, "wrote " + config.output->string() + "\n"};
}

Section validate(const RunConfig& config, const std::filesystem::path& path) {
  Section s{path.string(), {}, {}};
  s.checks.push_back(check_fundamental_identity(io::read_algebra(path), options_of(config)));
  return s;
}

Section derivations(const RunConfig& config, const std::filesystem::path& path) {
  auto opts = options_of(config);
  ThreeLieAlgebra a = io::read_algebra(path);
  Section s{path.string(), {}, {}};
  auto basis = derivation_algebra(a);
  CheckReport each;
  each.name = "derivation_basis";
  for (const auto& d : basis) merge_into(each, is_derivation(a, d, opts), opts.witness_cap);
  s.checks.push_back(std::move(each));
  bool inner_in_span = true;
  for (const auto& p : detail::combinations(a.dim(), 2))
    inner_in_span = inner_in_span &&
                    in_span(basis, inner_derivation(a, unit_vector(a.dim(), p[0]), unit_vector(a.dim(), p[1])));
  s.checks.push_back(boolean_report("inner_derivations_in_span", inner_in_span));
  s.fact("dimension", basis.size());
  s.fact("basis", maps_to_json(basis));
  return s;
}

Section check_extension(const RunConfig& config, const std::filesystem::path& path) {
  auto opts = options_of(config);
  ExtensionSpec spec = io::read_spec(path);
  Section s{path.string(), {}, {}};
  ConditionLedger ledger = check_extension_conditions(spec, opts);
  for (auto& c : ledger.conditions) s.checks.push_back(std::move(c));
  CheckReport identity = check_fundamental_identity(assemble(spec), opts);
  const bool is_three_lie = identity.passed;
  s.checks.push_back(std::move(identity));
  s.checks.push_back(boolean_report("conditions_match_identity", ledger.passed == is_three_lie));
  s.checks.push_back(check_condition_implications(spec, opts));
  s.checks.push_back(check_exact_sequence(spec, opts));
  s.fact("conditions_passed", ledger.passed);
  if (!is_three_lie) return s;

  s.checks.push_back(check_cube_sequence(spec, opts));
  ModuleCriterion module = check_module_criterion(spec, opts);
  s.checks.push_back(boolean_report("module_criterion", module.is_module == module.beta_mu_zero));
  s.fact("is_module", module.is_module);
  s.fact("beta_mu_zero", module.beta_mu_zero);
  if (spec.beta().is_zero() && module.is_module) {
    BetaFreeCriterion bf = check_beta_free_criterion(spec, opts);
    s.fact("mu_in_center", bf.mu_in_center.passed);
    s.fact("rho_into_center", bf.rho_into_center.passed);
    s.fact("rho_commutes_with_der", bf.rho_commutes_with_der.passed);
    s.fact("mu_cocycle", bf.mu_cocycle.passed);
    s.checks.push_back(boolean_report("beta_free_criterion", bf.passed == is_three_lie));
  }
  return s;
}

Section extend(const RunConfig& config) {
  require_inputs(config, 2, "a spec file and a pair file");
  auto opts = options_of(config);
  ExtensionSpec spec = io::read_spec(config.inputs[0]);
  DerivationPair pair = io::read_pair(config.inputs[1], spec);
  Section s{config.inputs[0].string() + " + " + config.inputs[1].string(), {}, {}};
  GammaSolution solution = solve_extendability(spec, pair);
  s.checks.push_back(boolean_report("extendable", solution.solvable));
  s.checks.push_back(boolean_report("triple_system_agrees", solve_triple_gamma(spec, pair).has_value() == solution.solvable));
  if (spec.beta().is_zero() && check_representation(spec.m(), spec.rho(), opts).passed)
    s.checks.push_back(boolean_report("beta_free_solver_agrees", solve_beta_free(spec, pair).solvable == solution.solvable));
  s.fact("solvable", solution.solvable);
  if (solution.solvable) {
    LinearMap delta = build_delta(pair, solution.particular);
    s.checks.push_back(verify_diagram(spec, pair, delta, opts));
    s.fact("gamma", io::matrix_to_json(solution.particular.matrix()));
    s.fact("delta", io::matrix_to_json(delta.matrix()));
    s.fact("solution_family_dim", solution.homogeneous.dim());
  }
  return s;
}

Section cube_command(const RunConfig& config, const std::filesystem::path& path) {
  auto opts = options_of(config);
  ThreeLieAlgebra base = io::read_algebra(path);
  Section s{path.string(), {}, {}};
  CheckReport base_identity = check_fundamental_identity(base, opts);
  base_identity.name = "base_fundamental_identity";
  const bool ok = base_identity.passed;
  s.checks.push_back(std::move(base_identity));
  if (!ok) return s;

  CubeAlgebra c(base);
  s.checks.push_back(check_fundamental_identity(c.carrier(), opts));
  for (auto& r : check_cube_blocks(c)) s.checks.push_back(std::move(r));
  s.checks.push_back(boolean_report("z_block_ideal", is_ideal(c.carrier(), c.blocks({CubeAlgebra::Block::z}))));

  // Alternate random derivations with random maps so both verdicts occur.
  std::mt19937_64 rng(config.seed);
  auto der = derivation_algebra(base);
  const std::size_t n = base.dim();
  std::size_t agree = 0, derivations_seen = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    Matrix m(n, n);
    if (t % 2 == 0) {
      for (const auto& d : der) m += d.matrix() * Scalar(static_cast<int>(rng() % 3) - 1);
    } else {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) m(r, col) = static_cast<int>(rng() % 3) - 1;
    }
    FDeltaCriterion verdict = check_f_delta(c, LinearMap(std::move(m)), opts);
    agree += verdict.is_derivation == verdict.is_homomorphism;
    derivations_seen += verdict.is_derivation;
  }
  CheckReport lemma = boolean_report("f_delta_biconditional", agree == config.trials);
  lemma.tuples_checked = config.trials;
  s.checks.push_back(std::move(lemma));
  s.fact("trials", config.trials);
  s.fact("derivations_among_trials", derivations_seen);
  s.fact("carrier_dim", c.carrier().dim());
  if (config.output) write_file(*config.output, io::algebra_to_json(c.carrier()).dump(2) + "\n");
  return s;
}

Section rep_check(const RunConfig& config) {
  require_inputs(config, 1, "an algebra file and optionally a pair action file");
  auto opts = options_of(config);
  ThreeLieAlgebra a = io::read_algebra(config.inputs[0]);
  PairAction rho = config.inputs.size() > 1 ? io::read_pair_action(config.inputs[1], a.dim()) : adjoint_action(a);
  Section s{config.inputs.size() > 1 ? config.inputs[0].string() + " + " + config.inputs[1].string()
                                     : config.inputs[0].string() + " (adjoint)",
            {},
            {}};
  CheckReport rep = check_representation(a, rho, opts);
  const bool is_module = rep.passed;
  s.checks.push_back(std::move(rep));
  if (is_module) s.checks.push_back(check_module_consequences(a, rho, opts));
  s.fact("target_dim", rho.target_dim());
  return s;
}

std::vector<Section> dispatch(const RunConfig& config) {
  std::vector<Section> sections;
  auto per_input = [&](auto fn) {
    require_inputs(config, 1, "at least one --input");
    for (const auto& p : config.inputs) sections.push_back(fn(config, p));
  };
  switch (config.command) {
    case Command::validate: per_input(validate); break;
    case Command::derivations: per_input(derivations); break;
    case Command::check_extension: per_input(check_extension); break;
    case Command::cube:
      if (config.output && config.inputs.size() > 1) throw InputError("cube: --output needs a single input");
      per_input(cube_command);
      break;
    case Command::extend: sections.push_back(extend(config)); break;
    case Command::rep_check: sections.push_back(rep_check(config)); break;
    case Command::make: break;
  }
  return sections;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command command) {
  for (const auto& [c, n] : kCommands)
    if (c == command) return n;
  return "?";
}

std::vector<std::string> fixture_names() {
  return {"abelian", "simple4", "gl-trace", "metric-so3", "lie-functional-so3", "lie-functional-heisenberg",
          "heisenberg-like-spec"};
}

unsigned default_jobs() {
  if (const char* env = std::getenv("FILIPPOV_LAB_JOBS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

RunResult run(const RunConfig& config) {
  try {
    if (config.command == Command::make) return run_make(config);
    if (config.jobs == 0) throw InputError("--jobs must be positive");
    auto sections = dispatch(config);
    const bool passed = std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.passed(); });
    return {passed ? 0 : 1, render(config, sections)};
  } catch (const InputError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace filippov::cli
