#ifndef COVARIANT_GRADED_HPP
#define COVARIANT_GRADED_HPP

#include "covariant/combinatorics.hpp"
#include "covariant/generators.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace covariant {

/// Default cap on the number of degree-t monomials in the variables.
inline constexpr std::size_t kDefaultMonomialCap = 20000;

/// Cap from COVARIANT_MONOMIAL_CAP if set, else kDefaultMonomialCap.
std::size_t monomial_cap_from_env();

/// Fine grading of k[W] preserved by U(G): degree in each copy of V or V*
/// together with the T(G)-weight. Every U-invariant, every generator and
/// every relation among generators splits along it.
struct BlockKey {
  std::vector<int> multidegree;
  Weight weight;

  friend bool operator==(const BlockKey&, const BlockKey&) = default;
  friend bool operator<(const BlockKey& a, const BlockKey& b);
};

std::string to_string(const BlockKey& key);

BlockKey block_of(const Exponents& e, const Scenario& s);

/// Exponent vector over the generators of a set.
using GenMonomial = std::vector<int>;

int monomial_degree(const GeneratorSet& gs, const GenMonomial& mono);
std::string monomial_label(const GeneratorSet& gs, const GenMonomial& mono);
BlockKey block_of(const GeneratorSet& gs, const GenMonomial& mono);

/// All generator monomials of total polynomial degree d, lexicographic.
std::vector<GenMonomial> generator_monomials(const GeneratorSet& gs, int d);

/// Same, grouped by block.
std::map<BlockKey, std::vector<GenMonomial>> generator_monomials_by_block(const GeneratorSet& gs, int d);

/// Symbolic product of generator polynomials, with cached powers.
class MonomialExpander {
 public:
  explicit MonomialExpander(const GeneratorSet& gs) : gs_(gs) {}
  Polynomial expand(const GenMonomial& mono);

 private:
  const Polynomial& power(std::size_t gen, int exponent);

  const GeneratorSet& gs_;
  std::map<std::pair<std::size_t, int>, Polynomial> powers_;
};

/// Evaluates generator monomials at a lazily grown list of random integer
/// points (coordinates in [-2^16, 2^16]).
class GeneratorEvaluator {
 public:
  GeneratorEvaluator(const GeneratorSet& gs, std::uint64_t seed);

  /// Generator values at point i.
  const std::vector<Scalar>& values(std::size_t i);
  Scalar monomial_value(std::size_t point, const GenMonomial& mono);

  /// Evaluation matrix with `points` rows and one column per monomial.
  ScalarMatrix matrix(const std::vector<GenMonomial>& monos, std::size_t points);

  /// Row rank of the evaluation matrix at 2 * monos.size() points.
  std::size_t rank(const std::vector<GenMonomial>& monos);

 private:
  const GeneratorSet& gs_;
  Rng rng_;
  std::vector<std::vector<Scalar>> values_;
};

/// Evaluation rank at two independent seeds derived from `seed`. Throws
/// std::runtime_error with a diagnostic if they disagree.
class CheckedRank {
 public:
  CheckedRank(const GeneratorSet& gs, std::uint64_t seed);
  std::size_t rank(const std::vector<GenMonomial>& monos, const std::string& context);

 private:
  GeneratorEvaluator first_;
  GeneratorEvaluator second_;
};

/// dim A_t per block, where A is the subalgebra generated by gs.
std::map<BlockKey, std::size_t> block_dimensions_A(const GeneratorSet& gs, int t, std::uint64_t seed);
std::size_t graded_dimension_A(const GeneratorSet& gs, int t, std::uint64_t seed);

/// dim of the U(G)-invariants of degree t per block (optionally only blocks
/// of weight w): the common kernel of the nilradical basis on each block.
/// Throws ResourceLimitError when the degree-t monomial count exceeds cap.
std::map<BlockKey, std::size_t> block_dimensions_U_inv(const Scenario& s, int t,
                                                       const std::optional<Weight>& w = std::nullopt,
                                                       std::size_t cap = kDefaultMonomialCap);
std::size_t graded_dimension_U_inv(const Scenario& s, int t, const std::optional<Weight>& w = std::nullopt,
                                   std::size_t cap = kDefaultMonomialCap);

/// All degree-t monomials in the variables of s (lexicographic).
std::vector<Exponents> variable_monomials(std::size_t num_vars, int t);

}  // namespace covariant

#endif  // COVARIANT_GRADED_HPP
