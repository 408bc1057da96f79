#ifndef COVARIANT_SYZYGIES_HPP
#define COVARIANT_SYZYGIES_HPP

#include "covariant/generators.hpp"
#include "covariant/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace covariant {

/// Wedge coordinates are indexed by k-subsets of {0, .., l-1} in
/// lexicographic order; e_I means e_{i_1} ^ .. ^ e_{i_k} with i_1 < .. < i_k.

/// q ^ x for q in wedge^k k^l and x in k^l.
Vector wedge(const Vector& q, std::size_t k, const Vector& x);
/// x ^ q.
Vector wedge(const Vector& x, const Vector& q, std::size_t k);

/// Matrix of wedge^k g on the lexicographic basis: entry (I, J) = det g[I, J].
ScalarMatrix compound_matrix(const ScalarMatrix& g, std::size_t k);

/// (q_1, .., q_p) with q_k in wedge^k k^l.
struct FlagPoint {
  std::size_t l = 0;
  std::vector<Vector> components;

  friend bool operator==(const FlagPoint&, const FlagPoint&) = default;
};

/// (u_n, u_{n-1} ^ u_n, .., u_{n-p+1} ^ .. ^ u_n) for the rows u_i of an
/// n x l matrix, p = min(l, n). The order-k component has the order-k lower
/// minors of the matrix as coordinates.
FlagPoint flag_map(const ScalarMatrix& point);

/// Basis of {x in k^l : q ^ x = 0} for q in wedge^k k^l.
std::vector<Vector> annihilator(const Vector& q, std::size_t k, std::size_t l);

/// q = 0 or dim Ann(q) = k.
bool is_decomposable(const Vector& q, std::size_t k, std::size_t l);

/// Ann(q_{i-1}) within Ann(q_i) for i = 2..p, where Ann(0) is all of k^l.
/// A zero component followed by a nonzero one therefore fails: such tuples
/// lie only in the closure of the image. Throws std::invalid_argument if a
/// component is not decomposable.
bool incidence_holds(const FlagPoint& f);

/// Linear relation among generator monomials of one block.
struct Relation {
  int degree = 0;
  BlockKey block;
  std::vector<std::pair<GenMonomial, Scalar>> terms;
  bool verified = false;  // expands to the zero polynomial
};

std::string format_relation(const GeneratorSet& gs, const Relation& rel);

/// Expands sum c * mono over the generator polynomials.
Polynomial expand_relation(const GeneratorSet& gs, const Relation& rel);

struct RelationOptions {
  /// Only monomials that are products of exactly this many generators.
  std::optional<int> generator_length;
  /// Only generators whose entry is true (empty: all generators).
  std::vector<bool> allowed;
  std::size_t cap = kDefaultMonomialCap;
};

struct RelationReport {
  int degree = 0;
  std::size_t ambient_dim = 0;
  std::size_t relation_dim = 0;
  std::vector<Relation> basis;

  bool verified() const;
};

/// Kernel of the evaluation map on the generator monomials of polynomial
/// degree d, block by block; ranks agree across two seeds and every basis
/// vector is confirmed by symbolic expansion (std::runtime_error otherwise).
/// Throws ResourceLimitError when the monomial count exceeds options.cap.
RelationReport relation_space(const GeneratorSet& gs, int d, std::uint64_t seed,
                              const RelationOptions& options = {});

/// Span of rel * mono for every relation in `seeds` (degree e <= d) and every
/// generator monomial of degree d - e, compared against `target`.
struct SpanComparison {
  std::size_t target_dim = 0;
  std::size_t span_dim = 0;
  bool equal = false;
};

SpanComparison compare_with_products(const GeneratorSet& gs, int d, const std::vector<Relation>& seeds,
                                     const RelationReport& target);

/// Whether rel lies in the span of products of `seeds` with monomials.
bool in_product_span(const GeneratorSet& gs, const std::vector<Relation>& seeds, const Relation& rel);

struct Degree2Report {
  int degree = 0;
  std::size_t relation_dim = 0;
  std::size_t quadratic_span_dim = 0;
  bool spans = false;
  bool ok() const { return spans; }
};

/// Relations of degree d are spanned by quadratic relations (products of two
/// generators on each side, any polynomial degree e <= d) times generator
/// monomials. Requires a GL set with m = 0 and d >= 2.
Degree2Report degree2_generation_check(const GeneratorSet& gs, int d, std::uint64_t seed,
                                       std::size_t cap = kDefaultMonomialCap);

/// One expansion i + j rows: the determinant of the last i rows stacked on
/// the last j rows, restricted to a column set, expanded along the first i
/// rows. sum sign * lowMinor[i; A] * lowMinor[j; S \ A] = 0.
struct BilinearTerm {
  int sign = 1;
  std::string left;
  std::string right;
};

struct BilinearSyzygy {
  std::string columns;
  std::vector<BilinearTerm> terms;
  bool symbolic_zero = false;
  bool numeric_zero = false;
};

/// All column subsets of size i + j. Requires 1 <= i, j and i + j <= min(l, n).
std::vector<BilinearSyzygy> bilinear_syzygies(const Scenario& s, int i, int j, std::uint64_t seed);

struct MixedRelationResult {
  Scenario scenario;
  Polynomial lhs;
  Polynomial rhs;  // from the epsilon-tensor sum with c expanded
  bool equal = false;
  Relation relation;  // the same identity as a relation among the generators
};

/// Relation between leftMinor[m]*lowMinor[l] and the products of smaller
/// minors with entries of C. Requires GL, 1 <= l, m <= n and l + m > n.
MixedRelationResult mixed_relation_verify(int n, int l, int m);

struct SplitRelationReport {
  std::string direction;  // "if" or "only if"
  Scenario scenario;
  int degree = 0;
  std::size_t relation_dim = 0;
  std::size_t span_dim = 0;
  bool ok = false;
};

/// l + m <= n: relations of degree <= max_degree are spanned by relations
/// among lower minors and among left minors, times generator monomials.
std::vector<SplitRelationReport> split_relations_check(const Scenario& s, int max_degree, std::uint64_t seed);

/// l + m > n: the mixed relation is a relation of degree l + m outside the
/// span of lower-degree relations times generator monomials.
SplitRelationReport mixed_relation_irreducibility(const Scenario& s, std::uint64_t seed);

}  // namespace covariant

#endif  // COVARIANT_SYZYGIES_HPP
