#include "covariant/generators.hpp"

#include "covariant/combinatorics.hpp"
#include "covariant/fundamental_weights.hpp"
#include "covariant/graded.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace covariant {

namespace {

PolyMatrix coordinates_of_V(const Scenario& s) {
  const std::size_t nv = s.num_vars();
  PolyMatrix m(static_cast<std::size_t>(s.n), static_cast<std::size_t>(s.l), Polynomial(nv));
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.l; ++j) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Polynomial::variable(nv, s.x_var(i, j));
    }
  }
  return m;
}

PolyMatrix coordinates_of_Vdual(const Scenario& s) {
  const std::size_t nv = s.num_vars();
  PolyMatrix m(static_cast<std::size_t>(s.m), static_cast<std::size_t>(s.n), Polynomial(nv));
  for (int i = 0; i < s.m; ++i) {
    for (int j = 0; j < s.n; ++j) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Polynomial::variable(nv, s.a_var(i, j));
    }
  }
  return m;
}

IndexList range(std::size_t from, std::size_t to) {
  IndexList r(to - from);
  std::iota(r.begin(), r.end(), from);
  return r;
}

void push(GeneratorSet& gs, std::string label, Polynomial poly) {
  Generator g;
  g.label = std::move(label);
  g.degree = poly.degree();
  g.weight = torus_weight(poly, gs.scenario);
  g.poly = std::move(poly);
  gs.gens.push_back(std::move(g));
}

std::vector<Scalar> unit_phi(std::size_t q, std::initializer_list<std::pair<int, int>> entries) {
  std::vector<Scalar> v(q, Scalar(0));
  for (const auto& [index, coeff] : entries) {
    if (index >= 1) v[static_cast<std::size_t>(index - 1)] += coeff;
  }
  return v;
}

}  // namespace

std::size_t GeneratorSet::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].label == label) return i;
  }
  throw std::out_of_range("no generator labelled " + label);
}

Polynomial lower_minor(const Scenario& s, const std::vector<std::size_t>& cols) {
  const std::size_t k = cols.size();
  const auto n = static_cast<std::size_t>(s.n);
  if (k == 0 || k > n) throw std::invalid_argument("lower minor order out of range");
  return minor(coordinates_of_V(s), range(n - k, n), cols);
}

Polynomial form_value(const Scenario& s, int i, int j) {
  const ScalarMatrix q = form_matrix(s);
  Polynomial out(s.num_vars());
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      const Scalar& c = q(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (c == 0) continue;
      out += Polynomial::variable(s.num_vars(), s.x_var(a, i)) *
             Polynomial::variable(s.num_vars(), s.x_var(b, j)) * c;
    }
  }
  return out;
}

GeneratorSet build_generators(const Scenario& s) {
  GeneratorSet gs{s, {}};
  const auto n = static_cast<std::size_t>(s.n);
  const auto l = static_cast<std::size_t>(s.l);
  const auto m = static_cast<std::size_t>(s.m);
  const PolyMatrix v = coordinates_of_V(s);

  if (s.group == GroupKind::GL) {
    for (int i = 0; i < s.m; ++i) {
      for (int j = 0; j < s.l; ++j) {
        Polynomial c(s.num_vars());
        for (int k = 0; k < s.n; ++k) {
          c += Polynomial::variable(s.num_vars(), s.a_var(i, k)) *
               Polynomial::variable(s.num_vars(), s.x_var(k, j));
        }
        push(gs, "C[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", std::move(c));
      }
    }
  } else {
    for (int i = 0; i < s.l; ++i) {
      for (int j = s.group == GroupKind::O ? i : i + 1; j < s.l; ++j) {
        push(gs, "Q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", form_value(s, i, j));
      }
    }
  }

  const std::size_t max_lower =
      s.group == GroupKind::Sp ? std::min(l, static_cast<std::size_t>(s.rank())) : std::min(l, n);
  for (std::size_t k = 1; k <= max_lower; ++k) {
    const IndexList rows = range(n - k, n);
    for (const auto& cols : combinations(l, k)) {
      push(gs, "lowMinor[" + std::to_string(k) + "; " + one_based(cols) + "]", minor(v, rows, cols));
    }
  }

  if (s.group == GroupKind::GL) {
    const PolyMatrix vd = coordinates_of_Vdual(s);
    for (std::size_t p = 1; p <= std::min(m, n); ++p) {
      const IndexList cols = range(0, p);
      for (const auto& rows : combinations(m, p)) {
        push(gs, "leftMinor[" + std::to_string(p) + "; " + one_based(rows) + "]", minor(vd, rows, cols));
      }
    }
  }

  if (s.group == GroupKind::O && s.n % 2 == 0) {
    const auto r = static_cast<std::size_t>(s.rank());
    if (l >= r) {
      // rows r and the last r - 1 rows (1-based r, r+2, .., n)
      IndexList rows{r - 1};
      for (std::size_t i = r + 1; i < n; ++i) rows.push_back(i);
      for (const auto& cols : combinations(l, r)) {
        push(gs, "midMinor[" + std::to_string(r) + "; " + one_based(cols) + "]", minor(v, rows, cols));
      }
    }
  }
  return gs;
}

bool operator<(const DegreeWeight& a, const DegreeWeight& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return Weight{a.phi} < Weight{b.phi};
}

std::string to_string(const DegreeWeight& dw) {
  return "(" + std::to_string(dw.degree) + ", " + to_string(Weight{dw.phi}) + ")";
}

std::vector<DegreeWeight> expected_weight_table(const Scenario& s) {
  if (s.l < s.n || (s.group == GroupKind::GL && s.m < s.n)) {
    throw std::domain_error("weight tables are stated for l >= n (and m >= n for GL) only");
  }
  const int n = s.n;
  const int r = s.rank();
  const auto q = static_cast<std::size_t>(r);
  std::set<DegreeWeight> table;
  auto add = [&](int degree, std::vector<Scalar> phi) { table.insert({degree, std::move(phi)}); };

  switch (s.group) {
    case GroupKind::GL:
      add(2, unit_phi(q, {}));
      for (int k = 1; k <= n; ++k) add(k, unit_phi(q, {{k, 1}}));
      for (int k = 1; k <= n; ++k) add(k, unit_phi(q, {{n - k, 1}, {n, -1}}));
      break;
    case GroupKind::Sp:
      add(2, unit_phi(q, {}));
      for (int k = 1; k <= r; ++k) add(k, unit_phi(q, {{k, 1}}));
      break;
    case GroupKind::O:
      if (n <= 2) throw std::domain_error("no weight table for O with n <= 2");
      add(2, unit_phi(q, {}));
      add(n, unit_phi(q, {}));
      if (n % 2 == 1) {
        for (int k = 1; k <= r - 1; ++k) {
          add(k, unit_phi(q, {{k, 1}}));
          add(n - k, unit_phi(q, {{k, 1}}));
        }
        add(r, unit_phi(q, {{r, 2}}));
        add(r + 1, unit_phi(q, {{r, 2}}));
      } else {
        for (int k = 1; k <= r - 2; ++k) {
          add(k, unit_phi(q, {{k, 1}}));
          add(n - k, unit_phi(q, {{k, 1}}));
        }
        add(r - 1, unit_phi(q, {{r - 1, 1}, {r, 1}}));
        add(r, unit_phi(q, {{r - 1, 2}}));
        add(r, unit_phi(q, {{r, 2}}));
        add(r + 1, unit_phi(q, {{r - 1, 1}, {r, 1}}));
      }
      break;
  }
  return {table.begin(), table.end()};
}

std::vector<DegreeWeight> weight_table(const GeneratorSet& gs) {
  std::set<DegreeWeight> table;
  for (const auto& g : gs.gens) table.insert({g.degree, to_phi(gs.scenario, g.weight.eps)});
  return {table.begin(), table.end()};
}

InvarianceReport check_invariance(const GeneratorSet& gs, int num_samples, std::uint64_t seed) {
  const Scenario& s = gs.scenario;
  InvarianceReport report;
  const auto lie = nilradical_basis(s);
  Rng rng = Rng(seed).substream("invariance");
  std::vector<GroupElement> samples;
  for (int i = 0; i < num_samples; ++i) samples.push_back(sample_unipotent(s, rng));
  report.generators_checked = gs.gens.size();
  report.lie_elements = lie.size();
  report.samples = samples.size();

  for (const auto& g : gs.gens) {
    for (const auto& x : lie) {
      if (!lie_act_on_polynomial(x, g.poly, s).is_zero()) {
        report.violations.push_back({g.label, "lie", x.matrix});
        break;
      }
    }
    for (const auto& u : samples) {
      if (!(act_on_polynomial(u, g.poly, s) == g.poly)) {
        report.violations.push_back({g.label, "group", u.matrix});
        break;
      }
    }
  }
  return report;
}

bool MinimalityReport::ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.essential; });
}

MinimalityReport minimality_check(const GeneratorSet& gs, std::uint64_t seed) {
  MinimalityReport report;
  report.outside_guarantee = gs.scenario.group == GroupKind::O && gs.scenario.n == 2;
  CheckedRank ranker(gs, seed);
  std::map<int, std::map<BlockKey, std::vector<GenMonomial>>> by_degree;
  for (std::size_t i = 0; i < gs.gens.size(); ++i) {
    const int d = gs.gens[i].degree;
    if (!by_degree.contains(d)) by_degree.emplace(d, generator_monomials_by_block(gs, d));
    GenMonomial self(gs.gens.size(), 0);
    self[i] = 1;
    const BlockKey key = block_of(gs, self);
    std::vector<GenMonomial> others;
    for (const auto& mono : by_degree[d][key]) {
      if (mono != self) others.push_back(mono);
    }
    MinimalityVerdict v;
    v.label = gs.gens[i].label;
    v.rank_without = ranker.rank(others, "minimality of " + v.label);
    others.push_back(self);
    v.rank_with = ranker.rank(others, "minimality of " + v.label);
    v.essential = v.rank_with > v.rank_without;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

SpMinorReport sp_high_minor_membership(const Scenario& s, int k) {
  if (s.group != GroupKind::Sp) throw std::invalid_argument("sp_high_minor_membership needs group Sp");
  if (k < 1 || k > std::min(s.l, s.n)) throw std::invalid_argument("minor order k out of range");
  const GeneratorSet gs = build_generators(s);
  SpMinorReport report;
  report.member = true;
  MonomialExpander expander(gs);
  const auto by_block = generator_monomials_by_block(gs, k);

  for (const auto& cols : combinations(static_cast<std::size_t>(s.l), static_cast<std::size_t>(k))) {
    MinorExpression expr;
    expr.minor_label = "lowMinor[" + std::to_string(k) + "; " + one_based(cols) + "]";
    const Polynomial target = lower_minor(s, cols);
    if (target.is_zero()) {
      expr.verified = true;
      report.certificates.push_back(std::move(expr));
      continue;
    }
    const BlockKey key = block_of(target.terms().begin()->first, s);
    const auto it = by_block.find(key);
    const std::vector<GenMonomial> candidates = it == by_block.end() ? std::vector<GenMonomial>{} : it->second;

    std::vector<Polynomial> expanded;
    std::map<Exponents, std::size_t> row_of;
    for (const auto& mono : candidates) {
      expanded.push_back(expander.expand(mono));
      for (const auto& [e, c] : expanded.back().terms()) row_of.try_emplace(e, row_of.size());
    }
    for (const auto& [e, c] : target.terms()) row_of.try_emplace(e, row_of.size());
    ScalarMatrix system(row_of.size(), candidates.size(), Scalar(0));
    Vector rhs(row_of.size(), Scalar(0));
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      for (const auto& [e, c] : expanded[j].terms()) system(row_of[e], j) = c;
    }
    for (const auto& [e, c] : target.terms()) rhs[row_of[e]] = c;

    const auto solution = solve(system, rhs);
    if (!solution) {
      report.member = false;
      report.certificates.push_back(std::move(expr));
      continue;
    }
    Polynomial check(s.num_vars());
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if ((*solution)[j] == 0) continue;
      expr.terms.emplace_back(monomial_label(gs, candidates[j]), (*solution)[j]);
      check += expanded[j] * (*solution)[j];
    }
    expr.verified = check == target;
    if (!expr.verified) report.member = false;
    report.certificates.push_back(std::move(expr));
  }
  return report;
}

}  // namespace covariant
