#include "covariant/fundamental_weights.hpp"
#include "covariant/groups.hpp"

#include <gtest/gtest.h>

using namespace covariant;

namespace {

Polynomial random_polynomial(const Scenario& s, Rng& rng, int degree, int terms) {
  Polynomial p(s.num_vars());
  for (int t = 0; t < terms; ++t) {
    Polynomial mono = Polynomial::constant(s.num_vars(), Scalar(rng.uniform(-5, 5)));
    for (int d = 0; d < degree; ++d) {
      mono *= Polynomial::variable(s.num_vars(), static_cast<std::size_t>(rng.uniform(0, static_cast<long>(s.num_vars()) - 1)));
    }
    p += mono;
  }
  return p;
}

// Linear coefficient in t of act(exp(tX), p), by exact interpolation at
// t = 0..D where D bounds the t-degree.
Polynomial linear_term(const LieElement& x, const Polynomial& p, const Scenario& s) {
  const std::size_t points = static_cast<std::size_t>(p.degree() * (s.n - 1) + 2);
  ScalarMatrix vandermonde(points, points, Scalar(0));
  std::vector<Polynomial> values;
  for (std::size_t k = 0; k < points; ++k) {
    Scalar power(1);
    for (std::size_t e = 0; e < points; ++e) {
      vandermonde(k, e) = power;
      power *= Scalar(static_cast<long>(k));
    }
    const LieElement scaled{Scalar(static_cast<long>(k)) * x.matrix};
    values.push_back(act_on_polynomial(exp_nilpotent(scaled), p, s));
  }
  const auto inv = inverse(vandermonde);
  Polynomial out(s.num_vars());
  for (std::size_t k = 0; k < points; ++k) out += values[k] * (*inv)(1, k);
  return out;
}

std::vector<Scenario> sample_scenarios() {
  return {Scenario::make(GroupKind::GL, 3, 2, 2), Scenario::make(GroupKind::GL, 2, 1, 1),
          Scenario::make(GroupKind::O, 3, 2), Scenario::make(GroupKind::O, 4, 2),
          Scenario::make(GroupKind::Sp, 2, 2), Scenario::make(GroupKind::Sp, 4, 1)};
}

}  // namespace

TEST(Scenario, Validation) {
  EXPECT_THROW(Scenario::make(GroupKind::Sp, 3, 1), std::invalid_argument);
  EXPECT_THROW(Scenario::make(GroupKind::O, 3, 1, 1), std::invalid_argument);
  EXPECT_THROW(Scenario::make(GroupKind::GL, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(Scenario::make(GroupKind::GL, 2, -1, 1), std::invalid_argument);
  EXPECT_EQ(parse_group("SP"), GroupKind::Sp);
  EXPECT_THROW(parse_group("so"), std::invalid_argument);
  const auto s = Scenario::make(GroupKind::GL, 3, 2, 1);
  EXPECT_EQ(s.num_vars(), 9u);
  EXPECT_EQ(s.x_var(2, 1), 5u);
  EXPECT_EQ(s.a_var(0, 2), 8u);
  EXPECT_EQ(s.copy_of(8), 2u);
}

TEST(Groups, FormMatrices) {
  const auto o3 = form_matrix(Scenario::make(GroupKind::O, 3, 1));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(o3(i, j), i + j == 2 ? 1 : 0);
  }
  EXPECT_EQ(form_matrix(Scenario::make(GroupKind::Sp, 2, 1)),
            ScalarMatrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}}));
  EXPECT_EQ(form_matrix(Scenario::make(GroupKind::O, 2, 1)),
            ScalarMatrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}));
  EXPECT_THROW(form_matrix(Scenario::make(GroupKind::GL, 2, 1)), std::invalid_argument);
}

TEST(Groups, NilradicalDimensionIsPositiveRootCount) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(nilradical_basis(Scenario::make(GroupKind::GL, n, 1)).size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
  for (int n = 2; n <= 7; ++n) {
    const int r = n / 2;
    const std::size_t expected = n % 2 == 1 ? r * r : r * (r - 1);
    EXPECT_EQ(nilradical_basis(Scenario::make(GroupKind::O, n, 1)).size(), expected) << "O n=" << n;
  }
  for (int n = 2; n <= 6; n += 2) {
    const int r = n / 2;
    EXPECT_EQ(nilradical_basis(Scenario::make(GroupKind::Sp, n, 1)).size(), static_cast<std::size_t>(r * r));
  }
  const auto sp2 = nilradical_basis(Scenario::make(GroupKind::Sp, 2, 1));
  ASSERT_EQ(sp2.size(), 1u);
  EXPECT_NE(sp2[0].matrix(0, 1), 0);
  EXPECT_EQ(sp2[0].matrix(0, 0), 0);
  EXPECT_EQ(sp2[0].matrix(1, 0), 0);
  EXPECT_EQ(sp2[0].matrix(1, 1), 0);
}

TEST(Groups, SamplesAreUnipotentAndPreserveForm) {
  for (const auto& s : sample_scenarios()) {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const GroupElement g = sample_unipotent(s, rng);
      for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j <= i; ++j) {
          EXPECT_EQ(g.matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), i == j ? 1 : 0);
        }
      }
      if (s.group != GroupKind::GL) EXPECT_TRUE(preserves_form(g, s)) << s.describe();
    }
  }
  const auto zero = LieElement{ScalarMatrix(3, 3, Scalar(0))};
  EXPECT_EQ(exp_nilpotent(zero).matrix, identity_matrix(3));
}

TEST(Groups, ActionIsARightAction) {
  for (const auto& s : sample_scenarios()) {
    Rng rng(9);
    const Polynomial p = random_polynomial(s, rng, 3, 4);
    const GroupElement g = sample_unipotent(s, rng);
    const GroupElement h = sample_unipotent(s, rng);
    EXPECT_EQ(act_on_polynomial(GroupElement{g.matrix * h.matrix}, p, s),
              act_on_polynomial(h, act_on_polynomial(g, p, s), s))
        << s.describe();
    EXPECT_EQ(act_on_polynomial(GroupElement{identity_matrix(static_cast<std::size_t>(s.n))}, p, s), p);
  }
}

TEST(Groups, LieActionIsTheDerivativeOfTheGroupAction) {
  for (const auto& s : sample_scenarios()) {
    Rng rng(21);
    const Polynomial p = random_polynomial(s, rng, 2, 3);
    for (const auto& x : nilradical_basis(s)) {
      EXPECT_EQ(lie_act_on_polynomial(x, p, s), linear_term(x, p, s)) << s.describe();
    }
    EXPECT_TRUE(lie_act_on_polynomial(nilradical_basis(s).front(), Polynomial::constant(s.num_vars(), Scalar(7)), s)
                    .is_zero());
  }
}

TEST(Groups, TorusWeightMatchesDiagonalAction) {
  const auto s = Scenario::make(GroupKind::GL, 3, 2, 2);
  const std::vector<long> t{2, 3, 5};
  ScalarMatrix diag(3, 3, Scalar(0));
  for (std::size_t i = 0; i < 3; ++i) diag(i, i) = Scalar(t[i]);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial mono = Polynomial::variable(s.num_vars(), static_cast<std::size_t>(rng.uniform(0, 11))) *
                            Polynomial::variable(s.num_vars(), static_cast<std::size_t>(rng.uniform(0, 11)));
    const Weight w = torus_weight(mono, s);
    Scalar factor(1);
    for (std::size_t i = 0; i < 3; ++i) {
      const long e = to_long(w.eps[i]);
      for (long k = 0; k < std::labs(e); ++k) {
        if (e < 0) {
          factor *= t[i];
        } else {
          factor /= t[i];
        }
      }
    }
    EXPECT_EQ(act_on_polynomial(GroupElement{diag}, mono, s), mono * factor);
  }
}

TEST(Groups, TorusWeightExamples) {
  const auto s = Scenario::make(GroupKind::GL, 3, 2, 1);
  const Polynomial xn = Polynomial::variable(s.num_vars(), s.x_var(2, 0));
  EXPECT_EQ(torus_weight(xn, s).eps, (std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(-1)}));
  const std::vector<long> phi{0, 1, -1};
  EXPECT_EQ(torus_weight(xn, s), weight_from_phi(s, phi));

  Polynomial c(s.num_vars());
  for (int k = 0; k < 3; ++k) {
    c += Polynomial::variable(s.num_vars(), s.a_var(0, k)) * Polynomial::variable(s.num_vars(), s.x_var(k, 1));
  }
  EXPECT_EQ(torus_weight(c, s).eps, std::vector<Scalar>(3, Scalar(0)));

  const Polynomial mixed = Polynomial::variable(s.num_vars(), s.x_var(0, 0)) +
                           Polynomial::variable(s.num_vars(), s.x_var(1, 0)) *
                               Polynomial::variable(s.num_vars(), s.x_var(0, 1));
  EXPECT_THROW(torus_weight(mixed, s), std::domain_error);
  EXPECT_THROW(torus_weight(Polynomial(s.num_vars()), s), std::invalid_argument);
}

TEST(Groups, RestrictWeightFoldsTheTorus) {
  const auto o5 = Scenario::make(GroupKind::O, 5, 1);
  const std::vector<Scalar> gl{Scalar(1), Scalar(0), Scalar(7), Scalar(0), Scalar(1)};
  EXPECT_EQ(restrict_weight(o5, gl).eps, (std::vector<Scalar>{Scalar(0), Scalar(0)}));
  const std::vector<Scalar> last{Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(-1)};
  EXPECT_EQ(restrict_weight(o5, last).eps, (std::vector<Scalar>{Scalar(1), Scalar(0)}));
}

TEST(FundamentalWeights, Examples) {
  const auto gl = Scenario::make(GroupKind::GL, 4, 1);
  const std::vector<Scalar> phi2{Scalar(0), Scalar(1), Scalar(0), Scalar(0)};
  EXPECT_EQ(to_eps(gl, phi2), (std::vector<Scalar>{Scalar(1), Scalar(1), Scalar(0), Scalar(0)}));

  const auto o5 = Scenario::make(GroupKind::O, 5, 1);
  const std::vector<Scalar> o5phi2{Scalar(0), Scalar(1)};
  EXPECT_EQ(to_eps(o5, o5phi2), (std::vector<Scalar>{Scalar(1, 2), Scalar(1, 2)}));

  const auto o6 = Scenario::make(GroupKind::O, 6, 1);
  const std::vector<Scalar> o6phi3{Scalar(0), Scalar(0), Scalar(1)};
  EXPECT_EQ(to_eps(o6, o6phi3), (std::vector<Scalar>{Scalar(1, 2), Scalar(1, 2), Scalar(-1, 2)}));

  const auto o2 = Scenario::make(GroupKind::O, 2, 1);
  const std::vector<Scalar> one{Scalar(1)};
  EXPECT_EQ(to_eps(o2, one), one);
}

TEST(FundamentalWeights, RoundTrips) {
  Rng rng(17);
  const std::vector<Scenario> scenarios{Scenario::make(GroupKind::GL, 4, 1), Scenario::make(GroupKind::O, 5, 1),
                                        Scenario::make(GroupKind::O, 6, 1), Scenario::make(GroupKind::Sp, 6, 1),
                                        Scenario::make(GroupKind::O, 2, 1)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& s = scenarios[static_cast<std::size_t>(trial) % scenarios.size()];
    std::vector<Scalar> eps(static_cast<std::size_t>(s.rank()));
    for (auto& c : eps) {
      c = Scalar(rng.uniform(-9, 9), rng.uniform(1, 4));
      c.canonicalize();
    }
    EXPECT_EQ(to_eps(s, to_phi(s, eps)), eps);
    EXPECT_EQ(to_phi(s, to_eps(s, eps)), eps);
  }
}

TEST(FundamentalWeights, IntegralPhiRejectsFractions) {
  const auto o5 = Scenario::make(GroupKind::O, 5, 1);
  EXPECT_EQ(integral_phi(o5, Weight{{Scalar(1), Scalar(1)}}), (std::vector<long>{0, 2}));
  EXPECT_THROW(integral_phi(o5, Weight{{Scalar(1, 2), Scalar(0)}}), std::domain_error);
}
