#include "covariant/suite.hpp"

#include "covariant/combinatorics.hpp"
#include "covariant/fundamental_weights.hpp"
#include "covariant/polytope.hpp"
#include "covariant/syzygies.hpp"
#include "covariant/weights.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace covariant {

namespace {

std::string scenario_name(const Scenario& s) {
  std::string out = to_string(s.group) + " n=" + std::to_string(s.n) + " l=" + std::to_string(s.l);
  if (s.group == GroupKind::GL) out += " m=" + std::to_string(s.m);
  return out;
}

Json strings_json(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

CheckResult guarded(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.name = name;
  try {
    body(c);
  } catch (const ResourceLimitError& e) {
    c.verdict = Verdict::Skipped;
    c.witness = {{"reason", e.what()}};
  } catch (const std::exception& e) {
    c.verdict = Verdict::Fail;
    c.witness = {{"error", e.what()}};
  }
  return c;
}

void fail(CheckResult& c, Json witness) {
  c.verdict = Verdict::Fail;
  if (c.witness.is_null()) c.witness = std::move(witness);
}

bool wants(const SuiteConfig& config, GroupKind g) { return config.groups.contains(g); }

// Scenarios carrying the closed-form weight data (l = n, m = n for GL).
std::vector<Scenario> formula_scenarios(const SuiteConfig& config) {
  std::vector<Scenario> out;
  if (wants(config, GroupKind::GL)) {
    for (int n = 1; n <= 4; ++n) out.push_back(Scenario::make(GroupKind::GL, n, n, n));
  }
  if (wants(config, GroupKind::O)) {
    for (int n = 3; n <= 7; ++n) out.push_back(Scenario::make(GroupKind::O, n, n));
  }
  if (wants(config, GroupKind::Sp)) {
    for (int n : {2, 4, 6}) out.push_back(Scenario::make(GroupKind::Sp, n, n));
  }
  return out;
}

// Coefficients 0..3, except k_n in -3..3 for GL.
std::vector<PhiWeight> chi_grid(const Scenario& s) {
  const auto q = static_cast<std::size_t>(s.rank());
  std::vector<PhiWeight> out;
  PhiWeight k(q, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == q) {
      out.push_back(k);
      return;
    }
    const long lo = s.group == GroupKind::GL && i + 1 == q ? -3 : 0;
    for (long v = lo; v <= 3; ++v) {
      k[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::optional<long> try_formula(const Scenario& s, const PhiWeight& chi) {
  try {
    return n_chi_formula(s, chi);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

PhiWeight scaled(const PhiWeight& chi, long c) {
  PhiWeight out = chi;
  for (auto& k : out) k *= c;
  return out;
}

ScalarMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  ScalarMatrix m(rows, cols, Scalar(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform_scalar(-bound, bound);
  }
  return m;
}

CriterionResult invariance(const SuiteConfig& config) {
  CriterionResult r;
  for (const auto& s : invariance_grid(config.groups)) {
    const std::string name = "invariance " + scenario_name(s);
    r.checks.push_back(guarded(name, [&](CheckResult& c) {
      const GeneratorSet gs = build_generators(s);
      const auto rep = check_invariance(gs, config.invariance_samples, check_seed(config.seed, name));
      c.details = {{"generators", rep.generators_checked}, {"lie_elements", rep.lie_elements}, {"samples", rep.samples}};
      if (!rep.ok()) {
        const auto& v = rep.violations.front();
        fail(c, {{"generator", v.label}, {"kind", v.kind}, {"element", matrix_json(v.witness)}});
      }
    }));
  }
  return r;
}

CriterionResult weight_tables(const SuiteConfig& config) {
  CriterionResult r;
  for (const auto& s : invariance_grid(config.groups)) {
    if (s.l < s.n || (s.group == GroupKind::GL && s.m < s.n)) continue;
    r.checks.push_back(guarded("weight table " + scenario_name(s), [&](CheckResult& c) {
      const auto computed = weight_table(build_generators(s));
      const auto expected = expected_weight_table(s);
      c.details = {{"pairs", expected.size()}};
      if (computed != expected) {
        std::vector<std::string> e, got;
        for (const auto& dw : expected) e.push_back(to_string(dw));
        for (const auto& dw : computed) got.push_back(to_string(dw));
        fail(c, {{"expected", strings_json(e)}, {"computed", strings_json(got)}});
      }
    }));
  }
  return r;
}

CriterionResult generation(const SuiteConfig& config) {
  CriterionResult r;
  for (const auto& s : generation_grid(config.groups)) {
    const std::string name = "generation " + scenario_name(s);
    r.checks.push_back(guarded(name, [&](CheckResult& c) {
      const GeneratorSet gs = build_generators(s);
      Json dims = Json::array();
      for (int t = 0; t <= 4; ++t) {
        const auto a = block_dimensions_A(gs, t, check_seed(config.seed, name));
        const auto u = block_dimensions_U_inv(s, t, std::nullopt, config.monomial_cap);
        std::size_t total = 0;
        for (const auto& [key, dim] : u) total += dim;
        dims.push_back(total);
        if (a == u) continue;
        Json witness = {{"t", t}, {"reason", "A has a block without U-invariants"}};
        for (const auto& [key, dim] : u) {
          const auto it = a.find(key);
          const std::size_t got = it == a.end() ? 0 : it->second;
          if (got != dim) {
            witness = {{"t", t}, {"block", to_string(key)}, {"dim_A", got}, {"dim_U_invariants", dim}};
            break;
          }
        }
        fail(c, witness);
      }
      c.details = {{"dimensions_t0_to_t4", dims}};
    }));
  }
  return r;
}

CriterionResult minimality(const SuiteConfig& config) {
  CriterionResult r;
  for (const auto& s : invariance_grid(config.groups)) {
    if (s.group == GroupKind::O && s.n <= 2) continue;
    const std::string name = "minimality " + scenario_name(s);
    r.checks.push_back(guarded(name, [&](CheckResult& c) {
      const auto rep = minimality_check(build_generators(s), check_seed(config.seed, name));
      c.details = {{"generators", rep.verdicts.size()}};
      std::vector<std::string> redundant;
      for (const auto& v : rep.verdicts) {
        if (!v.essential) redundant.push_back(v.label);
      }
      if (!redundant.empty()) fail(c, {{"redundant", strings_json(redundant)}});
    }));
  }
  return r;
}

CriterionResult nchi_formulas(const SuiteConfig& config) {
  CriterionResult r;
  for (const auto& s : formula_scenarios(config)) {
    r.checks.push_back(guarded("n(chi) " + scenario_name(s), [&](CheckResult& c) {
      const GeneratorSet gs = build_generators(s);
      std::size_t tested = 0, excluded = 0;
      for (const auto& chi : chi_grid(s)) {
        const auto formula = try_formula(s, chi);
        const auto oracle = n_chi_oracle(gs, chi, n_chi_search_bound(s, chi));
        if (!formula) {
          ++excluded;
          if (oracle) fail(c, {{"chi", format_phi(chi)}, {"formula", "undefined"}, {"oracle", *oracle}});
          continue;
        }
        ++tested;
        if (!oracle || *oracle != *formula) {
          fail(c, {{"chi", format_phi(chi)}, {"formula", *formula}, {"oracle", oracle ? Json(*oracle) : Json("not found")}});
        }
      }
      c.details = {{"weights", tested}, {"outside_lattice", excluded}};
    }));
  }
  return r;
}

CriterionResult nchi_scaling(const SuiteConfig& config) {
  CriterionResult r;
  for (const auto& s : formula_scenarios(config)) {
    r.checks.push_back(guarded("linearity " + scenario_name(s), [&](CheckResult& c) {
      const GeneratorSet gs = build_generators(s);
      std::size_t tested = 0;
      for (const auto& chi : chi_grid(s)) {
        const auto base = try_formula(s, chi);
        if (!base) continue;
        const auto base_oracle = n_chi_oracle(gs, chi, n_chi_search_bound(s, chi));
        for (long k = 1; k <= 4; ++k) {
          const PhiWeight multiple = scaled(chi, k);
          ++tested;
          const long f = n_chi_formula(s, multiple);
          const auto o = n_chi_oracle(gs, multiple, n_chi_search_bound(s, multiple));
          if (f != k * *base || !o || !base_oracle || *o != k * *base_oracle) {
            fail(c, {{"chi", format_phi(chi)},
                     {"c", k},
                     {"n(chi)", *base},
                     {"formula(c chi)", f},
                     {"oracle(c chi)", o ? Json(*o) : Json("not found")}});
          }
        }
      }
      c.details = {{"pairs", tested}};
    }));
  }
  return r;
}

CriterionResult m_equals_n(const SuiteConfig& config) {
  CriterionResult r;
  std::vector<Scenario> grid;
  if (wants(config, GroupKind::GL)) {
    grid.push_back(Scenario::make(GroupKind::GL, 2, 2, 2));
    grid.push_back(Scenario::make(GroupKind::GL, 3, 3, 3));
  }
  if (wants(config, GroupKind::O)) grid.push_back(Scenario::make(GroupKind::O, 3, 3));
  if (wants(config, GroupKind::Sp)) grid.push_back(Scenario::make(GroupKind::Sp, 2, 2));
  constexpr int cap = kDefaultMChiCap;
  for (const auto& s : grid) {
    r.checks.push_back(guarded("m(chi) = n(chi) " + scenario_name(s), [&](CheckResult& c) {
      std::map<Weight, int> first;
      for (int t = 0; t <= cap; ++t) {
        for (const auto& [w, dim] : u_invariant_weights(s, t, config.monomial_cap)) first.try_emplace(w, t);
      }
      for (const auto& [w, t] : first) {
        const PhiWeight chi = integral_phi(s, w);
        const long f = n_chi_formula(s, chi);
        if (f != t) fail(c, {{"chi", format_phi(chi)}, {"m", t}, {"n_formula", f}});
      }
      // Every weight carried by a generator monomial of degree <= cap must
      // have been reached by the U-invariants at the same first degree.
      const GeneratorSet gs = build_generators(s);
      std::set<Weight> reached;
      for (int d = 0; d <= cap; ++d) {
        for (const auto& mono : generator_monomials(gs, d)) reached.insert(block_of(gs, mono).weight);
      }
      for (const auto& w : reached) {
        const PhiWeight chi = integral_phi(s, w);
        const long f = n_chi_formula(s, chi);
        const auto it = first.find(w);
        if (f <= cap && (it == first.end() || it->second != f)) {
          fail(c, {{"chi", format_phi(chi)}, {"n_formula", f}, {"m", it == first.end() ? Json("not found") : Json(it->second)}});
        }
      }
      c.details = {{"weights", first.size()}, {"degree_cap", cap}};
    }));
  }
  return r;
}

CriterionResult polytope_inclusion(const SuiteConfig& config) {
  CriterionResult r;
  std::set<std::pair<GroupKind, int>> seen;
  for (const auto& s : invariance_grid(config.groups)) {
    if (!seen.insert({s.group, s.n}).second) continue;
    const Scenario base = Scenario::make(s.group, s.n, 0, 0);
    const std::string name = "polytope " + to_string(s.group) + " n=" + std::to_string(s.n);
    r.checks.push_back(guarded(name, [&](CheckResult& c) {
      const auto rep = polytope_inclusion_check(base, config.polytope_samples, check_seed(config.seed, name));
      c.details = {{"samples", rep.samples}, {"delta_vertices", rep.vertices}};
      if (!rep.ok()) fail(c, {{"kind", rep.failures.front().kind}, {"point", rep.failures.front().point}});
    }));
  }
  return r;
}

CriterionResult flag_quotient(const SuiteConfig& config) {
  CriterionResult r;
  if (!wants(config, GroupKind::GL)) return r;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t l = 2; l <= 4; ++l) {
      const std::string name = "flag map n=" + std::to_string(n) + " l=" + std::to_string(l);
      r.checks.push_back(guarded(name, [&](CheckResult& c) {
        Rng rng(check_seed(config.seed, name));
        for (int i = 0; i < config.flag_samples; ++i) {
          // every fifth input has entries in [-1, 1], where rank drops are common
          const ScalarMatrix m = random_matrix(rng, n, l, i % 5 == 4 ? 1 : 5);
          const FlagPoint f = flag_map(m);
          for (std::size_t k = 1; k <= f.components.size(); ++k) {
            IndexList rows(k);
            for (std::size_t t = 0; t < k; ++t) rows[t] = n - k + t;
            const auto subsets = combinations(l, k);
            for (std::size_t a = 0; a < subsets.size(); ++a) {
              if (f.components[k - 1][a] != minor(m, rows, subsets[a])) {
                fail(c, {{"matrix", matrix_json(m)}, {"component", k}, {"reason", "coordinate differs from lower minor"}});
              }
            }
            if (!is_decomposable(f.components[k - 1], k, l)) {
              fail(c, {{"matrix", matrix_json(m)}, {"component", k}, {"reason", "not decomposable"}});
            }
          }
          if (c.verdict == Verdict::Pass && !incidence_holds(f)) {
            fail(c, {{"matrix", matrix_json(m)}, {"reason", "incidence fails"}});
          }
        }
        for (int i = 0; i < config.equivariance_samples; ++i) {
          const ScalarMatrix m = random_matrix(rng, n, l, 5);
          ScalarMatrix g;
          do {
            g = random_matrix(rng, l, l, 3);
          } while (determinant(g) == 0);
          const FlagPoint moved = flag_map(m * g.transpose());
          const FlagPoint base = flag_map(m);
          for (std::size_t k = 1; k <= base.components.size(); ++k) {
            const ScalarMatrix wk = compound_matrix(g, k);
            Vector expect(wk.rows(), Scalar(0));
            for (std::size_t a = 0; a < wk.rows(); ++a) {
              for (std::size_t b = 0; b < wk.cols(); ++b) expect[a] += wk(a, b) * base.components[k - 1][b];
            }
            if (expect != moved.components[k - 1]) {
              fail(c, {{"matrix", matrix_json(m)}, {"g", matrix_json(g)}, {"component", k}, {"reason", "not equivariant"}});
            }
          }
        }
        c.details = {{"samples", config.flag_samples}, {"equivariance_samples", config.equivariance_samples}};
      }));
    }
  }
  return r;
}

CriterionResult mixed_relation(const SuiteConfig& config) {
  CriterionResult r;
  if (!wants(config, GroupKind::GL)) return r;
  for (int n = 1; n <= 4; ++n) {
    for (int l = 1; l <= n; ++l) {
      for (int m = 1; m <= n; ++m) {
        if (l + m <= n) continue;
        r.checks.push_back(guarded("mixed relation " + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(m),
                                   [&](CheckResult& c) {
                                     const MixedRelationResult z = mixed_relation_verify(n, l, m);
                                     c.details = {{"lhs_terms", z.lhs.size()}, {"relation_terms", z.relation.terms.size()}};
                                     if (!z.equal) fail(c, {{"reason", "sides differ"}});
                                     if (!z.relation.verified) fail(c, {{"reason", "generator form does not vanish"}});
                                   }));
      }
    }
  }
  return r;
}

CriterionResult bilinear(const SuiteConfig& config) {
  CriterionResult r;
  if (!wants(config, GroupKind::GL)) return r;
  for (int n = 1; n <= 4; ++n) {
    for (int l = 1; l <= 4; ++l) {
      const Scenario s = Scenario::make(GroupKind::GL, n, l, 0);
      const std::string name = "bilinear " + scenario_name(s);
      r.checks.push_back(guarded(name, [&](CheckResult& c) {
        const int p = std::min(n, l);
        std::size_t count = 0;
        for (int i = 1; i < p; ++i) {
          for (int j = 1; i + j <= p; ++j) {
            for (const auto& syz : bilinear_syzygies(s, i, j, check_seed(config.seed, name))) {
              ++count;
              if (!syz.symbolic_zero || !syz.numeric_zero) {
                fail(c, {{"i", i}, {"j", j}, {"columns", syz.columns}});
              }
            }
          }
        }
        c.details = {{"syzygies", count}};
      }));
    }
  }
  return r;
}

CriterionResult split_relations(const SuiteConfig& config) {
  CriterionResult r;
  if (!wants(config, GroupKind::GL)) return r;
  const auto report_json = [](const SplitRelationReport& t) {
    return Json{{"degree", t.degree}, {"relation_dim", t.relation_dim}, {"span_dim", t.span_dim}};
  };
  for (const auto& [s, top] : {std::pair{Scenario::make(GroupKind::GL, 4, 2, 2), 3},
                               std::pair{Scenario::make(GroupKind::GL, 4, 3, 1), 4}}) {
    const std::string name = "split relations " + scenario_name(s);
    r.checks.push_back(guarded(name, [&](CheckResult& c) {
      Json degrees = Json::array();
      for (const auto& t : split_relations_check(s, top, check_seed(config.seed, name))) {
        degrees.push_back(report_json(t));
        if (!t.ok) fail(c, report_json(t));
      }
      c.details = {{"degrees", degrees}};
    }));
  }
  for (const auto& s : {Scenario::make(GroupKind::GL, 2, 2, 1), Scenario::make(GroupKind::GL, 3, 2, 2)}) {
    const std::string name = "mixed relation irreducible " + scenario_name(s);
    r.checks.push_back(guarded(name, [&](CheckResult& c) {
      const auto t = mixed_relation_irreducibility(s, check_seed(config.seed, name));
      c.details = report_json(t);
      if (!t.ok) fail(c, report_json(t));
    }));
  }
  return r;
}

CriterionResult degree2(const SuiteConfig& config) {
  CriterionResult r;
  if (!wants(config, GroupKind::GL)) return r;
  for (int n = 1; n <= 3; ++n) {
    for (int l = 1; l <= 3; ++l) {
      const Scenario s = Scenario::make(GroupKind::GL, n, l, 0);
      const std::string name = "quadratic syzygies " + scenario_name(s);
      r.checks.push_back(guarded(name, [&](CheckResult& c) {
        const GeneratorSet gs = build_generators(s);
        Json degrees = Json::array();
        for (int d = 3; d <= 4; ++d) {
          const auto rep = degree2_generation_check(gs, d, check_seed(config.seed, name), config.monomial_cap);
          const Json entry = {{"degree", d}, {"relation_dim", rep.relation_dim}, {"quadratic_span_dim", rep.quadratic_span_dim}};
          degrees.push_back(entry);
          if (!rep.ok()) fail(c, entry);
        }
        c.details = {{"degrees", degrees}};
      }));
    }
  }
  return r;
}

CriterionResult sp_minors(const SuiteConfig& config) {
  CriterionResult r;
  if (!wants(config, GroupKind::Sp)) return r;
  for (const auto& [n, l, k] : {std::tuple{2, 2, 2}, std::tuple{4, 3, 3}}) {
    const Scenario s = Scenario::make(GroupKind::Sp, n, l);
    r.checks.push_back(guarded("high minors " + scenario_name(s) + " k=" + std::to_string(k), [&](CheckResult& c) {
      const GeneratorSet gs = build_generators(s);
      const auto rep = sp_high_minor_membership(s, k);
      Json certs = Json::array();
      for (const auto& cert : rep.certificates) {
        Json terms = Json::array();
        for (const auto& [label, coeff] : cert.terms) terms.push_back({{"monomial", label}, {"coefficient", to_string(coeff)}});
        certs.push_back({{"minor", cert.minor_label}, {"terms", terms}, {"verified", cert.verified}});
        if (!cert.verified || cert.terms.empty()) fail(c, {{"minor", cert.minor_label}});
      }
      if (!rep.member) fail(c, {{"reason", "a minor is outside the generated algebra"}});
      c.details = {{"certificates", certs}};
    }));
  }
  return r;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Skipped:
      return "skipped (cap)";
  }
  return "fail";
}

std::size_t CriterionResult::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.verdict == v ? 1 : 0;
  return n;
}

std::uint64_t check_seed(std::uint64_t seed, const std::string& name) { return Rng(seed).substream(name).engine()(); }

std::vector<Scenario> invariance_grid(const std::set<GroupKind>& groups) {
  std::vector<Scenario> out;
  if (groups.contains(GroupKind::GL)) {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l <= 4; ++l) {
        for (int m = 0; m <= 4; ++m) out.push_back(Scenario::make(GroupKind::GL, n, l, m));
      }
    }
  }
  if (groups.contains(GroupKind::O)) {
    for (int n = 3; n <= 5; ++n) {
      for (int l = 0; l <= 5; ++l) out.push_back(Scenario::make(GroupKind::O, n, l));
    }
  }
  if (groups.contains(GroupKind::Sp)) {
    for (int n : {2, 4}) {
      for (int l = 0; l <= 4; ++l) out.push_back(Scenario::make(GroupKind::Sp, n, l));
    }
  }
  return out;
}

std::vector<Scenario> generation_grid(const std::set<GroupKind>& groups) {
  std::vector<Scenario> out;
  if (groups.contains(GroupKind::GL)) {
    for (int n = 2; n <= 3; ++n) {
      for (int l = 0; l <= 3; ++l) {
        for (int m = 0; m <= 3; ++m) out.push_back(Scenario::make(GroupKind::GL, n, l, m));
      }
    }
  }
  if (groups.contains(GroupKind::O)) {
    for (int n = 3; n <= 4; ++n) {
      for (int l = 0; l <= 3; ++l) out.push_back(Scenario::make(GroupKind::O, n, l));
    }
  }
  if (groups.contains(GroupKind::Sp)) {
    for (int n : {2, 4}) {
      for (int l = 0; l <= 3; ++l) out.push_back(Scenario::make(GroupKind::Sp, n, l));
    }
  }
  return out;
}

std::string criterion_title(int id) {
  static const char* titles[] = {
      "generators are U-invariant",
      "degree/weight tables",
      "generators generate the U-invariants (t <= 4)",
      "generating systems are minimal",
      "n(chi) formulas match the exhaustive oracle",
      "n(c chi) = c n(chi)",
      "m(chi) = n(chi)",
      "Phi cap chamber lies in Delta",
      "flag quotient map",
      "mixed V/V* relation",
      "bilinear syzygies",
      "syzygies split iff l + m <= n",
      "minor syzygies are quadratic",
      "high Sp minors lie in the generated algebra",
  };
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id out of range");
  return titles[id - 1];
}

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  static const std::function<CriterionResult(const SuiteConfig&)> runners[] = {
      invariance,     weight_tables,      generation,    minimality,     nchi_formulas,
      nchi_scaling,   m_equals_n,         polytope_inclusion, flag_quotient, mixed_relation,
      bilinear,       split_relations,    degree2,       sp_minors,
  };
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id out of range");
  CriterionResult r = runners[id - 1](config);
  r.id = id;
  r.title = criterion_title(id);
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteConfig& config) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (config.criteria.empty() || config.criteria.contains(id)) out.push_back(run_criterion(id, config));
  }
  return out;
}

Json check_json(const CheckResult& c) {
  Json out = {{"name", c.name}, {"verdict", to_string(c.verdict)}, {"details", c.details}};
  if (!c.witness.is_null()) out["witness"] = c.witness;
  return out;
}

}  // namespace covariant
