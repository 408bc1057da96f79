#ifndef COVARIANT_POLYNOMIAL_HPP
#define COVARIANT_POLYNOMIAL_HPP

#include "covariant/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace covariant {

/// Exponent list over a fixed variable universe.
using Exponents = std::vector<std::uint8_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a sorted map from exponent lists to nonzero
/// coefficients, so two equal polynomials always have identical term maps.
/// Every operand of a binary operation must share the same number of
/// variables; a mismatch throws std::invalid_argument.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Scalar& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial term(Exponents exps, const Scalar& c);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Scalar& c) { return lhs *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial rhs) { return rhs *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Adds c * x^exps in place.
  void add_term(const Exponents& exps, const Scalar& c);

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Replaces variable i by images[i]. The images share their own universe,
  /// which becomes the universe of the result.
  Polynomial substitute(std::span<const Polynomial> images) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial pow(unsigned exponent) const;

 private:
  void require_same_universe(const Polynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

/// Human-readable form using the supplied variable names ("x1_1*a2_3 - 3/2").
std::string format_polynomial(const Polynomial& p, std::span<const std::string> names);

}  // namespace covariant

#endif  // COVARIANT_POLYNOMIAL_HPP
