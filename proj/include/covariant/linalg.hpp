#ifndef COVARIANT_LINALG_HPP
#define COVARIANT_LINALG_HPP

#include "covariant/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace covariant {

using Vector = std::vector<Scalar>;

/// Basis of the right null space, one vector per free column of the reduced
/// row echelon form. Empty iff the matrix has full column rank.
std::vector<Vector> kernel_basis(const ScalarMatrix& m);

std::size_t rank(const ScalarMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const ScalarMatrix& m, std::span<const Scalar> b);

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);

/// Determinant by Gaussian elimination.
Scalar determinant(const ScalarMatrix& m);

/// Fully expanded symbolic determinant via Laplace expansion along rows,
/// memoized on the remaining column subset.
Polynomial determinant(const PolyMatrix& m);

/// Determinant of the submatrix on the given (0-based, strictly increasing)
/// rows and columns. Throws std::invalid_argument on bad index lists.
Scalar minor(const ScalarMatrix& m, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols);
Polynomial minor(const PolyMatrix& m, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols);

/// Incrementally built row space of fixed width. Each stored row is reduced
/// against the earlier ones, so reduction in insertion order is exact.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == width_; }

  /// Adds a row; returns true if it increased the rank.
  bool add(Vector row);
  bool contains(Vector row) const;

 private:
  void reduce(Vector& row) const;

  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace covariant

#endif  // COVARIANT_LINALG_HPP
