#include "covariant/combinatorics.hpp"
#include "covariant/convex.hpp"
#include "covariant/linalg.hpp"
#include "covariant/random.hpp"

#include <gtest/gtest.h>

using namespace covariant;

namespace {

// Leibniz expansion, independent of the elimination code.
Scalar leibniz(const ScalarMatrix& m) {
  Scalar total(0);
  for (const auto& p : permutations(m.rows())) {
    Scalar term(permutation_sign(p));
    for (std::size_t i = 0; i < m.rows(); ++i) term *= m(i, p[i]);
    total += term;
  }
  return total;
}

ScalarMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
  ScalarMatrix m(r, c, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Scalar(rng.uniform(-bound, bound), rng.uniform(1, 3));
      m(i, j).canonicalize();
    }
  }
  return m;
}

}  // namespace

TEST(Scalar, ParseAndFormat) {
  EXPECT_EQ(to_string(parse_scalar("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_scalar("-2")), "-2");
  EXPECT_THROW(parse_scalar("4/-2"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("abc"), std::invalid_argument);
  EXPECT_THROW(parse_scalar(""), std::invalid_argument);
  EXPECT_TRUE(is_integer(parse_scalar("8/4")));
  EXPECT_EQ(to_long(parse_scalar("-8/4")), -2);
  EXPECT_THROW(to_long(parse_scalar("1/2")), std::domain_error);
}

TEST(Polynomial, ArithmeticIsCanonical) {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const Polynomial p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE((p + Polynomial::constant(2, Scalar(1))).is_homogeneous());
  EXPECT_EQ((x + y).pow(3), (x + y) * (x + y) * (x + y));
  EXPECT_EQ(Polynomial(2).degree(), -1);
}

TEST(Polynomial, EvaluateSubstituteDerivative) {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const Polynomial p = x * x * y * Scalar(3) - y;
  const std::vector<Scalar> pt{Scalar(2), Scalar(-1, 2)};
  EXPECT_EQ(p.evaluate(pt), Scalar(-6) + Scalar(1, 2));
  EXPECT_EQ(p.derivative(0), x * y * Scalar(6));
  EXPECT_EQ(p.derivative(1), x * x * Scalar(3) - Polynomial::constant(2, Scalar(1)));

  const auto t = Polynomial::variable(1, 0);
  const std::vector<Polynomial> images{t, t * t};
  const Polynomial q = p.substitute(images);
  EXPECT_EQ(q, t.pow(4) * Scalar(3) - t * t);
}

TEST(Polynomial, RejectsMixedUniverses) {
  Polynomial a = Polynomial::variable(2, 0);
  EXPECT_THROW(a += Polynomial::variable(3, 0), std::invalid_argument);
  EXPECT_THROW(a.evaluate(std::vector<Scalar>{Scalar(1)}), std::invalid_argument);
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  Rng rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const ScalarMatrix m = random_matrix(rng, n, n, 4);
      EXPECT_EQ(determinant(m), leibniz(m));
    }
  }
}

TEST(Linalg, SymbolicDeterminantMatchesLeibniz) {
  for (std::size_t n = 1; n <= 4; ++n) {
    PolyMatrix m(n, n, Polynomial(n * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Polynomial::variable(n * n, i * n + j);
    }
    Polynomial expected(n * n);
    for (const auto& p : permutations(n)) {
      Polynomial term = Polynomial::constant(n * n, Scalar(permutation_sign(p)));
      for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
      expected += term;
    }
    EXPECT_EQ(determinant(m), expected);
  }
}

TEST(Linalg, KernelRankSolveInverse) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
    ScalarMatrix m = random_matrix(rng, r, c, 2);
    if (r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;  // force a dependency
    }
    const auto kernel = kernel_basis(m);
    EXPECT_EQ(kernel.size() + rank(m), c);
    for (const auto& v : kernel) {
      for (std::size_t i = 0; i < r; ++i) {
        Scalar dot(0);
        for (std::size_t j = 0; j < c; ++j) dot += m(i, j) * v[j];
        EXPECT_EQ(dot, 0);
      }
    }
  }
  const auto a = ScalarMatrix::from_rows({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}});
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, identity_matrix(2));
  const auto x = solve(a, std::vector<Scalar>{Scalar(3), Scalar(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
  const auto singular = ScalarMatrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
  EXPECT_FALSE(inverse(singular));
  EXPECT_FALSE(solve(singular, std::vector<Scalar>{Scalar(1), Scalar(1)}));
}

TEST(Linalg, MinorValidatesIndices) {
  const auto a = identity_matrix(3);
  const std::vector<std::size_t> good{0, 2}, unsorted{2, 0}, outside{1, 3};
  EXPECT_EQ(minor(a, good, good), 1);
  EXPECT_THROW(minor(a, unsorted, good), std::invalid_argument);
  EXPECT_THROW(minor(a, good, outside), std::invalid_argument);
}

TEST(Linalg, RowSpace) {
  RowSpace s(3);
  EXPECT_TRUE(s.add({Scalar(1), Scalar(2), Scalar(3)}));
  EXPECT_FALSE(s.add({Scalar(2), Scalar(4), Scalar(6)}));
  EXPECT_TRUE(s.contains({Scalar(-1, 2), Scalar(-1), Scalar(-3, 2)}));
  EXPECT_FALSE(s.contains({Scalar(0), Scalar(0), Scalar(1)}));
  EXPECT_TRUE(s.add({Scalar(0), Scalar(1), Scalar(0)}));
  EXPECT_TRUE(s.add({Scalar(0), Scalar(0), Scalar(1)}));
  EXPECT_TRUE(s.full());
}

TEST(Convex, MembershipWithCertificate) {
  const std::vector<Vector> square{{Scalar(1), Scalar(0)}, {Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(0), Scalar(-1)}};
  const Vector inside{Scalar(1, 3), Scalar(-1, 3)};
  const auto lambda = convex_combination(inside, square);
  ASSERT_TRUE(lambda);
  Vector recon(2, Scalar(0));
  Scalar sum(0);
  for (std::size_t v = 0; v < square.size(); ++v) {
    EXPECT_GE((*lambda)[v], 0);
    sum += (*lambda)[v];
    for (std::size_t i = 0; i < 2; ++i) recon[i] += (*lambda)[v] * square[v][i];
  }
  EXPECT_EQ(sum, 1);
  EXPECT_EQ(recon, inside);
  EXPECT_TRUE(convex_membership(Vector{Scalar(1, 2), Scalar(1, 2)}, square));
  EXPECT_FALSE(convex_membership(Vector{Scalar(2), Scalar(0)}, square));
  EXPECT_FALSE(convex_membership(Vector{Scalar(1, 2), Scalar(51, 100)}, square));
}

TEST(Combinatorics, Basics) {
  EXPECT_EQ(combinations(4, 2).size(), 6u);
  EXPECT_EQ(combinations(4, 2).front(), (IndexList{0, 1}));
  EXPECT_EQ(combinations(4, 2).back(), (IndexList{2, 3}));
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({5, 7, 9}), 1);
  EXPECT_EQ(permutations(3).size(), 6u);
  EXPECT_EQ(multiset_count(3, 2), 6u);
  EXPECT_EQ(complement({1, 3}, 5), (IndexList{0, 2, 4}));
  EXPECT_EQ(one_based({0, 2, 3}), "1,3,4");
}

TEST(Random, SubstreamsAreStable) {
  Rng a(42), b(42);
  EXPECT_EQ(a.substream("x").uniform(0, 1000000), b.substream("x").uniform(0, 1000000));
  Rng c(42);
  const long first = c.substream("x").uniform(0, 1000000);
  EXPECT_NE(first, c.substream("y").uniform(0, 1000000));
  for (int i = 0; i < 100; ++i) {
    const long v = a.uniform(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}
