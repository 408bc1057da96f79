#ifndef COVARIANT_GENERATORS_HPP
#define COVARIANT_GENERATORS_HPP

#include "covariant/groups.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace covariant {

/// One element of the minimal generating system of k[W]^{U(G)}.
struct Generator {
  std::string label;
  Polynomial poly;
  int degree = 0;
  Weight weight;
};

struct GeneratorSet {
  Scenario scenario;
  std::vector<Generator> gens;

  std::size_t size() const { return gens.size(); }
  /// Index of the generator with this label; throws std::out_of_range.
  std::size_t index_of(const std::string& label) const;
};

/// The generating system for the scenario's case:
///
///   GL     C[i][j] (entries of V*V), lowMinor[k; cols] for k <= min(l, n),
///          leftMinor[p; rows] for p <= min(m, n)
///   O      Q[i][j] (i <= j), lowMinor[k; cols] for k <= min(l, n), and for
///          even n = 2r with l >= r also midMinor[r; cols] (rows r, r+2..n)
///   Sp     Q[i][j] (i < j), lowMinor[k; cols] for k <= min(l, r)
///
/// Index sets are enumerated lexicographically.
GeneratorSet build_generators(const Scenario& s);

/// Polynomial of a lower minor of order k on the given columns.
Polynomial lower_minor(const Scenario& s, const std::vector<std::size_t>& cols);

/// Q(v_i, v_j) expanded in the x variables.
Polynomial form_value(const Scenario& s, int i, int j);

/// (degree, weight in phi coordinates), ordered by degree then weight.
struct DegreeWeight {
  int degree = 0;
  std::vector<Scalar> phi;

  friend bool operator==(const DegreeWeight&, const DegreeWeight&) = default;
  friend bool operator<(const DegreeWeight& a, const DegreeWeight& b);
};

std::string to_string(const DegreeWeight& dw);

/// The distinct (degree, weight) pairs the generating system must realize,
/// written out from the closed-form tables for each case. Defined only for
/// l >= n (and m >= n for GL); throws std::domain_error elsewhere and for O
/// with n <= 2.
std::vector<DegreeWeight> expected_weight_table(const Scenario& s);

/// The distinct (degree, weight) pairs actually carried by gs.
std::vector<DegreeWeight> weight_table(const GeneratorSet& gs);

struct InvarianceViolation {
  std::string label;
  std::string kind;     // "lie" or "group"
  ScalarMatrix witness;  // offending Lie or group element
};

struct InvarianceReport {
  std::size_t generators_checked = 0;
  std::size_t lie_elements = 0;
  std::size_t samples = 0;
  std::vector<InvarianceViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Annihilation by every nilradical basis element (exact and complete) and
/// fixedness under num_samples random unipotent elements.
InvarianceReport check_invariance(const GeneratorSet& gs, int num_samples, std::uint64_t seed);

struct MinimalityVerdict {
  std::string label;
  bool essential = false;
  std::size_t rank_without = 0;
  std::size_t rank_with = 0;
};

struct MinimalityReport {
  std::vector<MinimalityVerdict> verdicts;
  /// O with n = 2: U(O) is trivial and the recipe over-generates.
  bool outside_guarantee = false;

  bool ok() const;
};

/// For each generator g of degree d: g must not lie in the span of the
/// degree-d monomials in the other generators (evaluation rank, two seeds).
MinimalityReport minimality_check(const GeneratorSet& gs, std::uint64_t seed);

struct MinorExpression {
  std::string minor_label;
  /// (generator monomial, coefficient) pairs summing to the minor.
  std::vector<std::pair<std::string, Scalar>> terms;
  bool verified = false;
};

struct SpMinorReport {
  bool member = false;
  std::vector<MinorExpression> certificates;
};

/// Expresses every order-k lower minor through the generating system by an
/// exact linear solve in degree k. Requires Sp and 1 <= k <= min(l, n);
/// throws std::invalid_argument otherwise.
SpMinorReport sp_high_minor_membership(const Scenario& s, int k);

}  // namespace covariant

#endif  // COVARIANT_GENERATORS_HPP
