#ifndef COVARIANT_GROUPS_HPP
#define COVARIANT_GROUPS_HPP

#include "covariant/linalg.hpp"
#include "covariant/polynomial.hpp"
#include "covariant/random.hpp"
#include "covariant/scenario.hpp"

#include <span>
#include <string>
#include <vector>

namespace covariant {

/// Character of the maximal torus T(G) in epsilon coordinates: length n for
/// GL, length r = floor(n/2) for O and Sp.
struct Weight {
  std::vector<Scalar> eps;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b);
  Weight& operator+=(const Weight& other);
};

std::string to_string(const Weight& w);

struct GroupElement {
  ScalarMatrix matrix;
};

struct LieElement {
  ScalarMatrix matrix;
};

/// Matrix of the invariant form: anti-diagonal of ones for O; +1 above the
/// center and -1 below it for Sp. Throws std::invalid_argument for GL.
ScalarMatrix form_matrix(const Scenario& s);

/// Basis of the Lie algebra of U(G): strictly upper triangular matrices,
/// additionally satisfying X^T Q + Q X = 0 for O and Sp. Each element is a
/// primitive integer matrix supported on a single root space.
std::vector<LieElement> nilradical_basis(const Scenario& s);

/// exp(X) for nilpotent X; the series terminates, so the result is exact.
GroupElement exp_nilpotent(const LieElement& x);

/// Random element of U(G). GL: unitriangular with entries in [-3, 3].
/// O and Sp: exp of a random integer combination (coefficients in [-3, 3])
/// of the nilradical basis.
GroupElement sample_unipotent(const Scenario& s, Rng& rng);

bool preserves_form(const GroupElement& g, const Scenario& s);

/// p o g: x_i^j -> sum_k g[i][k] x_k^j and a_i^j -> sum_k a_i^k (g^-1)[k][j].
/// Composition is a right action: act(gh, p) = act(h, act(g, p)).
Polynomial act_on_polynomial(const GroupElement& g, const Polynomial& p, const Scenario& s);

/// Derivative of act_on_polynomial along exp(tX) at t = 0. A derivation:
/// X.x_i^j = sum_k X[i][k] x_k^j and X.a_i^j = -sum_k a_i^k X[k][j].
Polynomial lie_act_on_polynomial(const LieElement& x, const Polynomial& p, const Scenario& s);

/// Image of a GL character (length n, epsilon coordinates) in the character
/// group of T(G): eps_{n+1-i} -> -eps_i, and the middle eps -> 0 for odd n.
Weight restrict_weight(const Scenario& s, std::span<const Scalar> gl_eps);

/// Weight of a monomial: +eps_col per a-factor, -eps_row per x-factor,
/// restricted to T(G).
Weight monomial_weight(const Exponents& e, const Scenario& s);

/// Common weight of all monomials of a nonzero polynomial. Throws
/// std::domain_error ("not a weight vector") when monomials disagree and
/// std::invalid_argument for the zero polynomial.
Weight torus_weight(const Polynomial& p, const Scenario& s);

std::string format_matrix(const ScalarMatrix& m);

}  // namespace covariant

#endif  // COVARIANT_GROUPS_HPP
