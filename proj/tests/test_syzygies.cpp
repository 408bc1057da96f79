#include "covariant/generators.hpp"
#include "covariant/json_io.hpp"
#include "covariant/syzygies.hpp"

#include <gtest/gtest.h>

using namespace covariant;

namespace {

Vector e(std::size_t l, std::size_t i) {
  Vector v(l, Scalar(0));
  v[i] = 1;
  return v;
}

Vector random_vector(Rng& rng, std::size_t l) {
  Vector v(l);
  for (auto& c : v) c = rng.uniform_scalar(-5, 5);
  return v;
}

ScalarMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  ScalarMatrix m(r, c, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform_scalar(-5, 5);
  }
  return m;
}

Vector times(const ScalarMatrix& m, const Vector& v) {
  Vector out(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

std::size_t span_rank(const std::vector<Vector>& vs, std::size_t l) {
  RowSpace s(l);
  for (const auto& v : vs) s.add(v);
  return s.rank();
}

}  // namespace

TEST(FlagMap, Examples) {
  const FlagPoint f = flag_map(identity_matrix(2));
  EXPECT_EQ(f.components, (std::vector<Vector>{{Scalar(0), Scalar(1)}, {Scalar(1)}}));
  const FlagPoint zero = flag_map(ScalarMatrix(3, 3, Scalar(0)));
  for (const auto& q : zero.components) {
    for (const auto& c : q) EXPECT_EQ(c, 0);
  }
  Rng rng(2);
  const ScalarMatrix m = random_matrix(rng, 3, 4);
  const FlagPoint g = flag_map(m);
  ASSERT_EQ(g.components.size(), 3u);
  for (std::size_t k = 1; k <= 3; ++k) {
    IndexList rows;
    for (std::size_t r = 3 - k; r < 3; ++r) rows.push_back(r);
    const auto subsets = combinations(4, k);
    for (std::size_t a = 0; a < subsets.size(); ++a) EXPECT_EQ(g.components[k - 1][a], minor(m, rows, subsets[a]));
    EXPECT_TRUE(is_decomposable(g.components[k - 1], k, 4));
  }
  EXPECT_TRUE(incidence_holds(g));
}

TEST(FlagMap, Equivariance) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t l = static_cast<std::size_t>(rng.uniform(2, 4));
    const ScalarMatrix m = random_matrix(rng, 3, l);
    const ScalarMatrix g = random_matrix(rng, l, l);
    const FlagPoint before = flag_map(m);
    const FlagPoint after = flag_map(m * g.transpose());
    for (std::size_t k = 1; k <= before.components.size(); ++k) {
      EXPECT_EQ(after.components[k - 1], times(compound_matrix(g, k), before.components[k - 1]));
    }
  }
}

TEST(Wedge, CompoundIsMultiplicative) {
  Rng rng(6);
  for (std::size_t k = 1; k <= 3; ++k) {
    const ScalarMatrix a = random_matrix(rng, 4, 4);
    const ScalarMatrix b = random_matrix(rng, 4, 4);
    EXPECT_EQ(compound_matrix(a * b, k), compound_matrix(a, k) * compound_matrix(b, k));
  }
  EXPECT_EQ(wedge(e(3, 0), 1, e(3, 1)), (Vector{Scalar(1), Scalar(0), Scalar(0)}));
  EXPECT_EQ(wedge(e(3, 1), 1, e(3, 0)), (Vector{Scalar(-1), Scalar(0), Scalar(0)}));
  EXPECT_EQ(wedge(e(3, 2), Vector{Scalar(1), Scalar(0), Scalar(0)}, 2), (Vector{Scalar(1)}));
}

TEST(Annihilator, Examples) {
  const Vector e12{Scalar(1), Scalar(0), Scalar(0)};
  const auto ann = annihilator(e12, 2, 3);
  EXPECT_EQ(ann.size(), 2u);
  EXPECT_EQ(span_rank({ann[0], ann[1], e(3, 0), e(3, 1)}, 3), 2u);
  EXPECT_EQ(annihilator(Vector(3, Scalar(0)), 1, 3).size(), 3u);

  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector w1 = random_vector(rng, 4);
    const Vector w2 = random_vector(rng, 4);
    const Vector q = wedge(w1, 1, w2);
    const auto a = annihilator(q, 2, 4);
    EXPECT_EQ(a.size(), 2u);
    EXPECT_EQ(span_rank({a[0], a[1], w1, w2}, 4), 2u);
  }
}

TEST(Annihilator, Decomposability) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) EXPECT_TRUE(is_decomposable(random_vector(rng, 3), 2, 3));
  const Vector classic{Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1)};
  EXPECT_FALSE(is_decomposable(classic, 2, 4));
}

TEST(Incidence, Examples) {
  FlagPoint bad{3, {e(3, 0), {Scalar(0), Scalar(0), Scalar(1)}}};
  EXPECT_FALSE(incidence_holds(bad));
  FlagPoint vacuous{3, {e(3, 2), Vector(3, Scalar(0)), Vector(1, Scalar(0))}};
  EXPECT_TRUE(incidence_holds(vacuous));
  // Ann(0) is the whole space, which no nonzero 2-vector annihilates.
  FlagPoint zero_first{3, {Vector(3, Scalar(0)), {Scalar(1), Scalar(0), Scalar(0)}}};
  EXPECT_FALSE(incidence_holds(zero_first));
  FlagPoint indecomposable{4, {e(4, 0), {Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1)}}};
  EXPECT_THROW(incidence_holds(indecomposable), std::invalid_argument);
}

TEST(Bilinear, Examples) {
  const auto s = bilinear_syzygies(Scenario::make(GroupKind::GL, 2, 2, 0), 1, 1, 1);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].terms.size(), 2u);
  EXPECT_TRUE(s[0].symbolic_zero);
  EXPECT_TRUE(s[0].numeric_zero);
  const auto p = bilinear_syzygies(Scenario::make(GroupKind::GL, 3, 3, 0), 1, 2, 1);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].terms.size(), 3u);
  EXPECT_TRUE(p[0].symbolic_zero);
  EXPECT_TRUE(p[0].numeric_zero);
  EXPECT_THROW(bilinear_syzygies(Scenario::make(GroupKind::GL, 3, 2, 0), 1, 2, 1), std::invalid_argument);
}

TEST(MixedRelation, SmallestCaseByHand) {
  const auto z = mixed_relation_verify(2, 2, 1);
  const auto& s = z.scenario;
  const auto var = [&](std::size_t i) { return Polynomial::variable(s.num_vars(), i); };
  const Polynomial expected =
      var(s.a_var(0, 0)) * (var(s.x_var(0, 0)) * var(s.x_var(1, 1)) - var(s.x_var(0, 1)) * var(s.x_var(1, 0)));
  EXPECT_EQ(z.lhs, expected);
  EXPECT_EQ(z.rhs, expected);
  EXPECT_TRUE(z.equal);
  EXPECT_TRUE(z.relation.verified);
  EXPECT_TRUE(expand_relation(build_generators(s), z.relation).is_zero());
}

TEST(MixedRelation, LargerCases) {
  EXPECT_TRUE(mixed_relation_verify(3, 2, 2).equal);
  EXPECT_TRUE(mixed_relation_verify(3, 3, 1).equal);
  EXPECT_THROW(mixed_relation_verify(3, 1, 2), std::invalid_argument);
}

TEST(Relations, Examples) {
  const auto gl220 = build_generators(Scenario::make(GroupKind::GL, 2, 2, 0));
  const auto r = relation_space(gl220, 2, 1);
  EXPECT_EQ(r.ambient_dim, 4u);
  EXPECT_EQ(r.relation_dim, 0u);
  EXPECT_EQ(relation_space(gl220, 1, 1).relation_dim, 0u);

  const auto gs = build_generators(Scenario::make(GroupKind::GL, 2, 2, 1));
  const auto three = relation_space(gs, 3, 1);
  EXPECT_GE(three.relation_dim, 1u);
  EXPECT_TRUE(three.verified());
  for (const auto& rel : three.basis) EXPECT_TRUE(expand_relation(gs, rel).is_zero()) << format_relation(gs, rel);
  EXPECT_TRUE(in_product_span(gs, three.basis, mixed_relation_verify(2, 2, 1).relation));
}

TEST(Relations, DegreeTwoGeneration) {
  for (const auto& [n, l] : {std::pair{3, 3}, std::pair{2, 3}}) {
    const auto report = degree2_generation_check(build_generators(Scenario::make(GroupKind::GL, n, l, 0)), 3, 1);
    EXPECT_TRUE(report.ok()) << n << " " << l;
    EXPECT_GT(report.relation_dim, 0u);
    EXPECT_EQ(report.quadratic_span_dim, report.relation_dim);
  }
  EXPECT_TRUE(degree2_generation_check(build_generators(Scenario::make(GroupKind::GL, 2, 2, 0)), 3, 1).ok());
}

TEST(Relations, MixedRelationIsIrreducible) {
  const auto report = mixed_relation_irreducibility(Scenario::make(GroupKind::GL, 2, 2, 1), 1);
  EXPECT_TRUE(report.ok);
  EXPECT_EQ(report.relation_dim, 1u);
  EXPECT_EQ(report.span_dim, 0u);
}

TEST(JsonIo, RoundTrips) {
  EXPECT_EQ(scalar_json(Scalar(3, 2)), "3/2");
  EXPECT_EQ(scalar_from_json(Json(4)), 4);
  EXPECT_EQ(scalar_from_json(Json("-1/3")), Scalar(-1, 3));
  EXPECT_THROW(scalar_from_json(Json(1.5)), std::invalid_argument);

  const auto m = ScalarMatrix::from_rows({{Scalar(1), Scalar(1, 2)}, {Scalar(0), Scalar(-3)}});
  EXPECT_EQ(matrix_from_json(matrix_json(m)), m);
  EXPECT_THROW(matrix_from_json(Json::parse("[[1,2],[3]]")), std::invalid_argument);

  const FlagPoint f = flag_map(m);
  EXPECT_EQ(flag_point_from_json(flag_point_json(f)), f);
  EXPECT_THROW(flag_point_from_json(Json::parse(R"({"l":3,"components":[[1,0]]})")), std::invalid_argument);
  EXPECT_THROW(flag_point_from_json(Json::parse(R"({"l":2,"p":2,"components":[[1,0]]})")), std::invalid_argument);

  const auto gs = build_generators(Scenario::make(GroupKind::GL, 2, 2, 1));
  const Json j = generator_set_json(gs);
  EXPECT_EQ(j["count"], 6);
  EXPECT_EQ(j["generators"][2]["label"], "lowMinor[1; 1]");
  EXPECT_EQ(j["generators"][2]["weight_phi"], Json::parse(R"(["1","-1"])"));
  EXPECT_EQ(j["generators"][2]["poly"], Json::parse(R"({"vars":6,"terms":[{"coeff":"1","exps":[0,1,0,0,0,0]}]})"));
  EXPECT_EQ(j["generators"][2]["display"], "x2_1");
}
