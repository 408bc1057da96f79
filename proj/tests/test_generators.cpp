#include "covariant/fundamental_weights.hpp"
#include "covariant/generators.hpp"
#include "covariant/graded.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace covariant;

namespace {

std::vector<std::string> labels(const GeneratorSet& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs.gens) out.push_back(g.label);
  return out;
}

DegreeWeight dw(int degree, std::vector<long> phi) {
  DegreeWeight out{degree, {}};
  for (long k : phi) out.phi.emplace_back(k);
  return out;
}

std::set<DegreeWeight> as_set(const std::vector<DegreeWeight>& v) { return {v.begin(), v.end()}; }

// Number of exponent vectors e >= 0 with sum e_i * degrees[i] = d.
std::size_t count_weighted(const std::vector<int>& degrees, std::size_t from, int d) {
  if (d == 0) return 1;
  if (from == degrees.size()) return 0;
  std::size_t total = 0;
  for (int used = 0; used <= d; used += degrees[from]) total += count_weighted(degrees, from + 1, d - used);
  return total;
}

}  // namespace

TEST(Generators, GlExample) {
  const auto gs = build_generators(Scenario::make(GroupKind::GL, 2, 2, 1));
  EXPECT_EQ(labels(gs), (std::vector<std::string>{"C[1][1]", "C[1][2]", "lowMinor[1; 1]", "lowMinor[1; 2]",
                                                  "lowMinor[2; 1,2]", "leftMinor[1; 1]"}));
  const auto& s = gs.scenario;
  EXPECT_EQ(gs.gens[gs.index_of("lowMinor[1; 1]")].poly, Polynomial::variable(s.num_vars(), s.x_var(1, 0)));
  EXPECT_EQ(gs.gens[gs.index_of("leftMinor[1; 1]")].poly, Polynomial::variable(s.num_vars(), s.a_var(0, 0)));
  const auto x = [&](int row, int copy) { return Polynomial::variable(s.num_vars(), s.x_var(row, copy)); };
  EXPECT_EQ(gs.gens[gs.index_of("lowMinor[2; 1,2]")].poly, x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0));
  EXPECT_EQ(gs.gens[gs.index_of("C[1][2]")].degree, 2);
  EXPECT_THROW(gs.index_of("nope"), std::out_of_range);
}

TEST(Generators, SpAndOExamples) {
  const auto sp = build_generators(Scenario::make(GroupKind::Sp, 2, 2));
  EXPECT_EQ(labels(sp), (std::vector<std::string>{"Q[1][2]", "lowMinor[1; 1]", "lowMinor[1; 2]"}));
  const auto o = build_generators(Scenario::make(GroupKind::O, 3, 1));
  EXPECT_EQ(labels(o), (std::vector<std::string>{"Q[1][1]", "lowMinor[1; 1]"}));
  const auto& s = o.scenario;
  EXPECT_EQ(o.gens[0].poly, Polynomial::variable(3, s.x_var(0, 0)) * Polynomial::variable(3, s.x_var(2, 0)) * Scalar(2) +
                                Polynomial::variable(3, s.x_var(1, 0)).pow(2));
  const auto d4 = build_generators(Scenario::make(GroupKind::O, 4, 2));
  EXPECT_NO_THROW(d4.index_of("midMinor[2; 1,2]"));
}

TEST(Generators, ExpectedWeightTables) {
  const auto gl = Scenario::make(GroupKind::GL, 2, 2, 2);
  const std::set<DegreeWeight> gl_expected{dw(2, {0, 0}), dw(1, {1, 0}), dw(2, {0, 1}), dw(1, {1, -1}), dw(2, {0, -1})};
  EXPECT_EQ(as_set(expected_weight_table(gl)), gl_expected);
  EXPECT_EQ(as_set(weight_table(build_generators(gl))), gl_expected);

  const auto o5 = as_set(expected_weight_table(Scenario::make(GroupKind::O, 5, 5)));
  EXPECT_TRUE(o5.count(dw(2, {0, 2})));
  EXPECT_TRUE(o5.count(dw(5, {0, 0})));

  const auto sp = Scenario::make(GroupKind::Sp, 4, 4);
  const std::set<DegreeWeight> sp_expected{dw(2, {0, 0}), dw(1, {1, 0}), dw(2, {0, 1})};
  EXPECT_EQ(as_set(expected_weight_table(sp)), sp_expected);
  EXPECT_EQ(as_set(weight_table(build_generators(sp))), sp_expected);

  EXPECT_THROW(expected_weight_table(Scenario::make(GroupKind::GL, 3, 2, 3)), std::domain_error);
  EXPECT_THROW(expected_weight_table(Scenario::make(GroupKind::O, 2, 2)), std::domain_error);
}

TEST(Generators, InvarianceHolds) {
  for (const auto& s : {Scenario::make(GroupKind::GL, 3, 3, 3), Scenario::make(GroupKind::O, 4, 4),
                        Scenario::make(GroupKind::Sp, 4, 3)}) {
    const auto report = check_invariance(build_generators(s), 10, 1);
    EXPECT_TRUE(report.ok()) << s.describe();
    EXPECT_EQ(report.lie_elements, nilradical_basis(s).size());
  }
}

TEST(Generators, InvarianceDetectsInjectedVariable) {
  auto gs = build_generators(Scenario::make(GroupKind::GL, 2, 2, 1));
  const auto& s = gs.scenario;
  const Polynomial x11 = Polynomial::variable(s.num_vars(), s.x_var(0, 0));
  gs.gens.push_back({"x1_1", x11, 1, torus_weight(x11, s)});
  const auto report = check_invariance(gs, 5, 1);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().label, "x1_1");
  EXPECT_EQ(report.violations.front().kind, "lie");
  EXPECT_EQ(report.violations.front().witness, ScalarMatrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}}));
  for (const auto& v : report.violations) EXPECT_EQ(v.label, "x1_1");
}

TEST(Generators, Minimality) {
  for (const auto& s : {Scenario::make(GroupKind::GL, 2, 2, 1), Scenario::make(GroupKind::Sp, 2, 2),
                        Scenario::make(GroupKind::O, 4, 3)}) {
    const auto report = minimality_check(build_generators(s), 1);
    EXPECT_TRUE(report.ok()) << s.describe();
    EXPECT_FALSE(report.outside_guarantee);
  }
  const auto sp = minimality_check(build_generators(Scenario::make(GroupKind::Sp, 2, 2)), 1);
  // Ranks are taken inside the block of the generator, which holds only x_2^1.
  for (const auto& v : sp.verdicts) {
    if (v.label == "lowMinor[1; 1]") {
      EXPECT_EQ(v.rank_with, 1u);
      EXPECT_EQ(v.rank_without, 0u);
    }
  }

  // U(O_2) is trivial: Q(v1, v1) = 2 x_1 x_2 is a product of the other generators.
  const auto o2 = minimality_check(build_generators(Scenario::make(GroupKind::O, 2, 1)), 1);
  EXPECT_TRUE(o2.outside_guarantee);
  EXPECT_FALSE(o2.verdicts.front().essential);

  // With n = 1 every C[i][j] factors as leftMinor[1; i] * lowMinor[1; j].
  const auto gl1 = minimality_check(build_generators(Scenario::make(GroupKind::GL, 1, 1, 1)), 1);
  EXPECT_FALSE(gl1.ok());
  EXPECT_EQ(gl1.verdicts.front().label, "C[1][1]");
  EXPECT_FALSE(gl1.verdicts.front().essential);
}

TEST(Generators, SpHighMinors) {
  const auto sp2 = sp_high_minor_membership(Scenario::make(GroupKind::Sp, 2, 2), 2);
  EXPECT_TRUE(sp2.member);
  ASSERT_EQ(sp2.certificates.size(), 1u);
  EXPECT_TRUE(sp2.certificates[0].verified);
  ASSERT_EQ(sp2.certificates[0].terms.size(), 1u);
  EXPECT_EQ(sp2.certificates[0].terms[0].first, "Q[1][2]");
  EXPECT_EQ(abs(sp2.certificates[0].terms[0].second), 1);

  const auto sp4 = sp_high_minor_membership(Scenario::make(GroupKind::Sp, 4, 3), 3);
  EXPECT_TRUE(sp4.member);
  EXPECT_EQ(sp4.certificates.size(), 1u);
  EXPECT_TRUE(sp_high_minor_membership(Scenario::make(GroupKind::Sp, 4, 3), 1).member);

  EXPECT_THROW(sp_high_minor_membership(Scenario::make(GroupKind::GL, 2, 2, 0), 2), std::invalid_argument);
  EXPECT_THROW(sp_high_minor_membership(Scenario::make(GroupKind::Sp, 2, 2), 3), std::invalid_argument);
}

TEST(Graded, MonomialCounts) {
  EXPECT_EQ(variable_monomials(3, 2).size(), 6u);
  EXPECT_EQ(variable_monomials(4, 0).size(), 1u);
  for (const auto& s : {Scenario::make(GroupKind::GL, 2, 2, 1), Scenario::make(GroupKind::O, 4, 3)}) {
    const auto gs = build_generators(s);
    std::vector<int> degrees;
    for (const auto& g : gs.gens) degrees.push_back(g.degree);
    for (int d = 0; d <= 5; ++d) {
      const auto monos = generator_monomials(gs, d);
      EXPECT_EQ(monos.size(), count_weighted(degrees, 0, d));
      for (const auto& m : monos) EXPECT_EQ(monomial_degree(gs, m), d);
    }
  }
}

TEST(Graded, SmallDimensions) {
  const auto gl = Scenario::make(GroupKind::GL, 2, 1, 0);
  const auto gs = build_generators(gl);
  for (int t = 0; t <= 4; ++t) {
    EXPECT_EQ(graded_dimension_A(gs, t, 1), 1u);
    EXPECT_EQ(graded_dimension_U_inv(gl, t), 1u);
  }
  const auto sp = Scenario::make(GroupKind::Sp, 2, 2);
  EXPECT_EQ(graded_dimension_A(build_generators(sp), 2, 1), graded_dimension_U_inv(sp, 2));
  const auto gl3 = Scenario::make(GroupKind::GL, 3, 3, 3);
  EXPECT_EQ(graded_dimension_A(build_generators(gl3), 2, 1), 36u);
  EXPECT_EQ(block_dimensions_A(build_generators(gl3), 2, 1), block_dimensions_U_inv(gl3, 2));
}

TEST(Graded, CapRaisesResourceLimit) {
  EXPECT_THROW(graded_dimension_U_inv(Scenario::make(GroupKind::GL, 3, 3, 3), 2, std::nullopt, 10),
               ResourceLimitError);
}

TEST(Graded, MonomialExpanderMatchesProducts) {
  const auto gs = build_generators(Scenario::make(GroupKind::GL, 2, 2, 1));
  MonomialExpander expander(gs);
  const GenMonomial mono{1, 0, 2, 0, 0, 1};
  const Polynomial expected = gs.gens[0].poly * gs.gens[2].poly * gs.gens[2].poly * gs.gens[5].poly;
  EXPECT_EQ(expander.expand(mono), expected);
  EXPECT_EQ(monomial_label(gs, mono), "C[1][1]*lowMinor[1; 1]^2*leftMinor[1; 1]");
}
