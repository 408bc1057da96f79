#include "covariant/fundamental_weights.hpp"
#include "covariant/generators.hpp"
#include "covariant/json_io.hpp"
#include "covariant/polytope.hpp"
#include "covariant/suite.hpp"
#include "covariant/syzygies.hpp"
#include "covariant/weights.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace covariant;

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct Options {
  std::string command;
  std::string group = "gl";
  int n = 2;
  std::optional<int> l;
  std::optional<int> m;
  std::uint64_t seed = 1;
  std::optional<int> samples;
  std::optional<int> degree;
  std::optional<long> cap;
  std::optional<std::size_t> monomial_cap;
  std::optional<int> k;
  int i = 1;
  int j = 1;
  std::string chi;
  std::string matrix;
  std::string groups = "gl,o,sp";
  std::string criteria;
  std::string format = "json";
  std::string output;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  Json config = Json::object();
  Json checks = Json::array();
  Json result = Json::object();

  void check(const std::string& name, bool ok, Json witness = nullptr, Json details = nullptr) {
    Json c = {{"name", name}, {"verdict", ok ? "pass" : "fail"}};
    if (!details.is_null()) c["details"] = std::move(details);
    if (!ok && !witness.is_null()) c["witness"] = std::move(witness);
    checks.push_back(std::move(c));
  }

  bool failed() const {
    for (const auto& c : checks) {
      if (c.at("verdict") == "fail") return true;
    }
    return false;
  }
};

std::size_t monomial_cap(const Options& o) { return o.monomial_cap ? *o.monomial_cap : monomial_cap_from_env(); }

// Formula and oracle queries live in the l, m >= n regime unless told otherwise.
bool defaults_to_regime(const std::string& command) {
  return command == "nchi" || command == "nchi-oracle" || command == "mchi-oracle" || command == "lemma3";
}

Scenario scenario_of(const Options& o) {
  const GroupKind g = parse_group(o.group);
  const int fallback = defaults_to_regime(o.command) ? o.n : 0;
  const int l = o.l.value_or(fallback);
  const int m = g == GroupKind::GL ? o.m.value_or(fallback) : o.m.value_or(0);
  return Scenario::make(g, o.n, l, m);
}

Json config_json(const Options& o) {
  Json c = {{"command", o.command}, {"seed", o.seed}};
  if (o.command == "zacep") {
    c["n"] = o.n;
    if (o.l) c["l"] = *o.l;
    if (o.m) c["m"] = *o.m;
  } else if (o.command != "full-suite") {
    c["scenario"] = scenario_json(scenario_of(o));
  }
  if (o.samples) c["samples"] = *o.samples;
  if (o.degree) c["degree"] = *o.degree;
  if (o.cap) c["degree_cap"] = *o.cap;
  c["monomial_cap"] = monomial_cap(o);
  if (!o.chi.empty()) c["chi"] = o.chi;
  if (o.k) c["k"] = *o.k;
  return c;
}

PhiWeight require_chi(const Options& o, const Scenario& s) {
  if (o.chi.empty()) throw UsageError("--chi is required");
  PhiWeight chi = parse_phi(o.chi);
  if (chi.size() != static_cast<std::size_t>(s.rank())) {
    throw UsageError("--chi needs " + std::to_string(s.rank()) + " comma-separated coefficients");
  }
  return chi;
}

Json dw_json(const std::vector<DegreeWeight>& table) {
  Json out = Json::array();
  for (const auto& dw : table) out.push_back({{"degree", dw.degree}, {"phi", vector_json(dw.phi)}});
  return out;
}

void cmd_generate(const Options& o, Report& r) { r.result = generator_set_json(build_generators(scenario_of(o))); }

void cmd_invariance(const Options& o, Report& r) {
  const GeneratorSet gs = build_generators(scenario_of(o));
  const auto rep = check_invariance(gs, o.samples.value_or(100), o.seed);
  for (const auto& g : gs.gens) {
    Json witness = nullptr;
    for (const auto& v : rep.violations) {
      if (v.label == g.label && witness.is_null()) witness = {{"kind", v.kind}, {"element", matrix_json(v.witness)}};
    }
    r.check(g.label, witness.is_null(), witness);
  }
  r.result = {{"generators", rep.generators_checked}, {"lie_elements", rep.lie_elements}, {"samples", rep.samples}};
}

void cmd_weights_table(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  const auto computed = weight_table(build_generators(s));
  r.result["computed"] = dw_json(computed);
  try {
    const auto expected = expected_weight_table(s);
    r.result["expected"] = dw_json(expected);
    r.check("table matches closed form", computed == expected);
  } catch (const std::domain_error& e) {
    r.result["expected"] = e.what();
  }
}

void cmd_nchi(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  const PhiWeight chi = require_chi(o, s);
  r.result["n"] = n_chi_formula(s, chi);
  if (s.group == GroupKind::GL) {
    Json steps = Json::array();
    for (const auto& step : gl_minimal_presentation(s.n, chi).steps) steps.push_back(to_string(step));
    r.result["presentation"] = steps;
  }
}

void cmd_nchi_oracle(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  const PhiWeight chi = require_chi(o, s);
  const auto v = n_chi_oracle(build_generators(s), chi, o.cap.value_or(kDefaultNChiCap));
  r.result["n"] = v ? Json(*v) : Json("not found");
}

void cmd_mchi_oracle(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  const PhiWeight chi = require_chi(o, s);
  const auto v = m_chi_oracle(s, chi, static_cast<int>(o.cap.value_or(kDefaultMChiCap)), monomial_cap(o));
  r.result["m"] = v ? Json(*v) : Json("not found");
}

void cmd_nchi_scaling(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  const GeneratorSet gs = build_generators(s);
  const PhiWeight chi = require_chi(o, s);
  const long base = n_chi_formula(s, chi);
  const auto base_oracle = n_chi_oracle(gs, chi, n_chi_search_bound(s, chi));
  Json values = Json::array();
  for (long c = 1; c <= o.k.value_or(4); ++c) {
    PhiWeight multiple = chi;
    for (auto& x : multiple) x *= c;
    const long f = n_chi_formula(s, multiple);
    const auto oracle = n_chi_oracle(gs, multiple, n_chi_search_bound(s, multiple));
    const bool ok = f == c * base && oracle && base_oracle && *oracle == c * *base_oracle;
    r.check("c=" + std::to_string(c), ok, {{"formula", f}, {"oracle", oracle ? Json(*oracle) : Json("not found")}});
    values.push_back({{"c", c}, {"n", f}});
  }
  r.result["n"] = values;
}

void cmd_polytope_inclusion(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  const auto rep = polytope_inclusion_check(s, o.samples.value_or(500), o.seed);
  std::size_t sample_failures = 0;
  std::size_t vertex_failures = 0;
  Json sample_witness = nullptr, vertex_witness = nullptr;
  for (const auto& f : rep.failures) {
    if (f.kind == "sample") {
      if (sample_failures++ == 0) sample_witness = {{"point", f.point}};
    } else if (vertex_failures++ == 0) {
      vertex_witness = {{"point", f.point}};
    }
  }
  r.check("samples of Phi cap chamber lie in Delta", sample_failures == 0, sample_witness);
  r.check("Delta vertices lie in Phi cap chamber", vertex_failures == 0, vertex_witness);
  const PolytopeSpec spec = build_polytopes(s);
  Json delta = Json::array();
  for (const auto& v : spec.delta_vertices) delta.push_back(vector_json(v));
  r.result = {{"samples", rep.samples}, {"delta_vertices", delta}};
}

ScalarMatrix read_matrix(const Options& o, const Scenario& s) {
  if (o.matrix.empty()) {
    Rng rng = Rng(o.seed).substream("flag-map");
    ScalarMatrix m(static_cast<std::size_t>(s.n), static_cast<std::size_t>(s.l), Scalar(0));
    for (std::size_t a = 0; a < m.rows(); ++a) {
      for (std::size_t b = 0; b < m.cols(); ++b) m(a, b) = rng.uniform_scalar(-5, 5);
    }
    return m;
  }
  Json j;
  try {
    j = Json::parse(o.matrix);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("--matrix is not valid JSON: ") + e.what());
  }
  const ScalarMatrix m = matrix_from_json(j);
  if (m.rows() != static_cast<std::size_t>(s.n) || m.cols() != static_cast<std::size_t>(s.l)) {
    throw UsageError("--matrix must be n x l");
  }
  return m;
}

void cmd_flag_map(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  if (s.group != GroupKind::GL || s.l < 1) throw UsageError("flag-map needs --group gl and --l >= 1");
  const ScalarMatrix m = read_matrix(o, s);
  const FlagPoint f = flag_map(m);
  bool minors_ok = true;
  bool decomposable = true;
  for (std::size_t k = 1; k <= f.components.size(); ++k) {
    IndexList rows(k);
    for (std::size_t t = 0; t < k; ++t) rows[t] = m.rows() - k + t;
    const auto subsets = combinations(m.cols(), k);
    for (std::size_t a = 0; a < subsets.size(); ++a) minors_ok &= f.components[k - 1][a] == minor(m, rows, subsets[a]);
    decomposable &= is_decomposable(f.components[k - 1], k, f.l);
  }
  r.check("coordinates are lower minors", minors_ok);
  r.check("components are decomposable", decomposable);
  r.check("annihilators are nested", decomposable && incidence_holds(f));
  r.result = {{"matrix", matrix_json(m)}, {"flag_point", flag_point_json(f)}};
}

void cmd_bilinear(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  if (s.group != GroupKind::GL) throw UsageError("bilinear needs --group gl");
  Json relations = Json::array();
  for (const auto& syz : bilinear_syzygies(s, o.i, o.j, o.seed)) {
    std::string text;
    for (const auto& t : syz.terms) {
      text += (t.sign > 0 ? (text.empty() ? "" : " + ") : (text.empty() ? "-" : " - ")) + t.left + "*" + t.right;
    }
    r.check("columns " + syz.columns, syz.symbolic_zero && syz.numeric_zero);
    relations.push_back({{"columns", syz.columns}, {"relation", text + " = 0"}});
  }
  r.result["relations"] = relations;
}

void cmd_mixed_relation(const Options& o, Report& r) {
  if (!o.l || !o.m) throw UsageError("zacep needs --n, --l and --m");
  const MixedRelationResult z = mixed_relation_verify(o.n, *o.l, *o.m);
  const GeneratorSet gs = build_generators(z.scenario);
  const auto names = z.scenario.variable_names();
  r.check("both sides agree", z.equal);
  r.check("relation among generators vanishes", z.relation.verified);
  r.result = {{"verdict", z.equal ? "equal" : "different"},
              {"lhs", format_polynomial(z.lhs, names)},
              {"rhs", format_polynomial(z.rhs, names)},
              {"relation", format_relation(gs, z.relation)}};
}

void cmd_relations(const Options& o, Report& r) {
  const GeneratorSet gs = build_generators(scenario_of(o));
  RelationOptions opts;
  opts.cap = monomial_cap(o);
  const RelationReport rep = relation_space(gs, o.degree.value_or(2), o.seed, opts);
  Json basis = Json::array();
  for (const auto& rel : rep.basis) basis.push_back(format_relation(gs, rel));
  r.check("relations expand to zero", rep.verified());
  r.result = {{"degree", rep.degree}, {"ambient_dim", rep.ambient_dim}, {"relation_dim", rep.relation_dim}, {"basis", basis}};
}

void cmd_degree2(const Options& o, Report& r) {
  const GeneratorSet gs = build_generators(scenario_of(o));
  const int d = o.degree.value_or(3);
  const auto rep = degree2_generation_check(gs, d, o.seed, monomial_cap(o));
  const Json dims = {{"relation_dim", rep.relation_dim}, {"quadratic_span_dim", rep.quadratic_span_dim}};
  r.check("degree " + std::to_string(d) + " relations come from quadratic ones", rep.ok(), dims);
  r.result = dims;
}

void cmd_sp_minor(const Options& o, Report& r) {
  const Scenario s = scenario_of(o);
  const auto rep = sp_high_minor_membership(s, o.k.value_or(s.l));
  Json certs = Json::array();
  for (const auto& cert : rep.certificates) {
    Json terms = Json::array();
    for (const auto& [label, c] : cert.terms) terms.push_back({{"monomial", label}, {"coefficient", to_string(c)}});
    certs.push_back({{"minor", cert.minor_label}, {"terms", terms}, {"verified", cert.verified}});
    r.check(cert.minor_label, cert.verified);
  }
  r.result = {{"member", rep.member}, {"certificates", certs}};
}

void cmd_minimality(const Options& o, Report& r) {
  const GeneratorSet gs = build_generators(scenario_of(o));
  const auto rep = minimality_check(gs, o.seed);
  for (const auto& v : rep.verdicts) {
    r.check(v.label, v.essential, {{"rank_without", v.rank_without}, {"rank_with", v.rank_with}});
  }
  r.result = {{"generators", rep.verdicts.size()}, {"outside_guarantee", rep.outside_guarantee}};
}

std::set<int> parse_criteria(const std::string& text) {
  std::set<int> out;
  for (long id : parse_phi(text)) {
    if (id < 1 || id > kCriterionCount) throw UsageError("criterion ids run from 1 to " + std::to_string(kCriterionCount));
    out.insert(static_cast<int>(id));
  }
  return out;
}

void cmd_full_suite(const Options& o, Report& r) {
  SuiteConfig config;
  config.seed = o.seed;
  if (o.samples) config.invariance_samples = *o.samples;
  config.monomial_cap = monomial_cap(o);
  config.groups.clear();
  std::stringstream in(o.groups);
  std::string item;
  while (std::getline(in, item, ',')) config.groups.insert(parse_group(item));
  config.criteria = parse_criteria(o.criteria);
  r.config["groups"] = o.groups;
  if (!o.criteria.empty()) r.config["criteria"] = o.criteria;

  Json summary = Json::array();
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!config.criteria.empty() && !config.criteria.contains(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    const CriterionResult res = run_criterion(id, config);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    for (const auto& c : res.checks) {
      Json j = check_json(c);
      j["criterion"] = id;
      r.checks.push_back(std::move(j));
    }
    Json entry = {{"criterion", id},
                  {"title", res.title},
                  {"passed", res.count(Verdict::Pass)},
                  {"failed", res.count(Verdict::Fail)},
                  {"skipped", res.count(Verdict::Skipped)}};
    if (o.timing) entry["timing_ms"] = ms.count();
    summary.push_back(std::move(entry));
  }
  r.result["criteria"] = summary;
}

std::string render_text(const Options& o, const Json& report) {
  std::ostringstream out;
  out << "command: " << o.command << "\n";
  const Json& config = report.at("config");
  if (config.contains("scenario")) {
    const Json& s = config.at("scenario");
    out << "scenario: " << s.at("group").get<std::string>() << " n=" << s.at("n") << " l=" << s.at("l")
        << " m=" << s.at("m") << "\n";
  }
  out << "seed: " << config.at("seed") << "\n";
  const Json& result = report.at("result");
  if (o.command == "generate") {
    for (const auto& g : result.at("generators")) {
      out << "  " << g.at("label").get<std::string>() << "  deg " << g.at("degree") << "  phi "
          << g.at("weight_phi").dump() << "  " << g.at("display").get<std::string>() << "\n";
    }
  } else if (o.command == "weights-table") {
    out << "degree | weight (phi coordinates)\n";
    for (const auto& row : result.at("computed")) {
      std::string phi;
      const auto& coeffs = row.at("phi");
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::string c = coeffs[i].get<std::string>();
        if (c == "0") continue;
        if (!phi.empty()) phi += c[0] == '-' ? " - " : " + ";
        else if (c[0] == '-') phi += "-";
        const std::string mag = c[0] == '-' ? c.substr(1) : c;
        phi += (mag == "1" ? "" : mag) + "phi_" + std::to_string(i + 1);
      }
      out << std::string(6 - std::min<std::size_t>(6, std::to_string(row.at("degree").get<int>()).size()), ' ')
          << row.at("degree") << " | " << (phi.empty() ? "0" : phi) << "\n";
    }
  } else {
    out << "result: " << result.dump(2) << "\n";
  }
  if (!report.at("checks").empty()) out << "checks:\n";
  for (const auto& c : report.at("checks")) {
    out << "  [" << c.at("verdict").get<std::string>() << "] " << c.at("name").get<std::string>();
    if (c.contains("witness")) out << "  witness: " << c.at("witness").dump();
    out << "\n";
  }
  return out.str();
}

int run(const Options& o) {
  Report r;
  r.config = config_json(o);
  const auto start = std::chrono::steady_clock::now();
  static const std::map<std::string, void (*)(const Options&, Report&)> commands = {
      {"generate", cmd_generate},       {"check-invariance", cmd_invariance}, {"weights-table", cmd_weights_table},
      {"nchi", cmd_nchi},               {"nchi-oracle", cmd_nchi_oracle},     {"mchi-oracle", cmd_mchi_oracle},
      {"lemma3", cmd_nchi_scaling},           {"lemma4", cmd_polytope_inclusion},               {"flag-map", cmd_flag_map},
      {"bilinear", cmd_bilinear},       {"zacep", cmd_mixed_relation},                 {"relations", cmd_relations},
      {"degree2-gen", cmd_degree2},     {"sp-minor", cmd_sp_minor},           {"minimality", cmd_minimality},
      {"full-suite", cmd_full_suite},
  };
  commands.at(o.command)(o, r);
  Json report = {{"tool_version", kToolVersion}, {"config", r.config}, {"checks", r.checks}, {"result", r.result}};
  if (o.timing) {
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  const std::string text = o.format == "text" ? render_text(o, report) : report.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.output);
    if (!file) throw UsageError("cannot write " + o.output);
    file << text;
  }
  return r.failed() ? 1 : 0;
}

void add_scenario_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.group, "gl, o or sp")->capture_default_str();
  cmd->add_option("--n", o.n, "dimension of V")->capture_default_str();
  cmd->add_option("--l", o.l, "copies of V");
  cmd->add_option("--m", o.m, "copies of V* (GL only)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariants of classical groups: generators, weights and syzygies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  const auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_scenario_options(cmd, o);
    cmd->add_option("--seed", o.seed, "seed for all randomness")->capture_default_str();
    cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    cmd->add_option("--output", o.output, "write the report here instead of stdout");
    cmd->add_option("--monomial-cap", o.monomial_cap, "cap on monomial counts");
    cmd->add_flag("--timing", o.timing, "include wall-clock timings in the report");
    return cmd;
  };

  CLI::App* gen = add("generate", "list the generating system");
  gen->alias("gen");
  add("check-invariance", "check U-invariance of the generators")->add_option("--samples", o.samples);
  add("weights-table", "degree/weight table of the generators");
  add("nchi", "n(chi) from the closed formulas")->add_option("--chi", o.chi, "phi coefficients, e.g. 1,0,2");
  CLI::App* nchi_oracle = add("nchi-oracle", "n(chi) by exhaustive search");
  nchi_oracle->add_option("--chi", o.chi);
  nchi_oracle->add_option("--cap", o.cap, "degree cap (default 8)");
  CLI::App* mchi = add("mchi-oracle", "m(chi) from the U-invariants");
  mchi->add_option("--chi", o.chi);
  mchi->add_option("--cap", o.cap, "degree cap (default 4)");
  CLI::App* scaling = add("lemma3", "n(c chi) = c n(chi)");
  scaling->add_option("--chi", o.chi);
  scaling->add_option("--k", o.k, "largest multiple c (default 4)");
  add("lemma4", "Phi cap chamber inside Delta")->add_option("--samples", o.samples);
  add("flag-map", "flag quotient map of an n x l matrix")->add_option("--matrix", o.matrix, "JSON rows, e.g. [[1,0],[0,1]]");
  CLI::App* bil = add("bilinear", "bilinear syzygies among lower minors");
  bil->add_option("--i", o.i)->capture_default_str();
  bil->add_option("--j", o.j)->capture_default_str();
  add("zacep", "mixed relation for l + m > n");
  add("relations", "relations among generators in one degree")->add_option("--degree", o.degree);
  add("degree2-gen", "relations generated in degree 2")->add_option("--degree", o.degree);
  add("sp-minor", "express high Sp lower minors through generators")->add_option("--k", o.k);
  add("minimality", "no generator is redundant");
  CLI::App* suite = add("full-suite", "run the whole verification grid");
  suite->add_option("--groups", o.groups, "comma-separated group filter")->capture_default_str();
  suite->add_option("--criteria", o.criteria, "comma-separated criterion ids (default all)");
  suite->add_option("--samples", o.samples, "unipotent samples per invariance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (const auto* sub : app.get_subcommands()) o.command = sub->get_name();

  try {
    return run(o);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
