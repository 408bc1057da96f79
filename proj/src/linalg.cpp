#include "covariant/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace covariant {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(row, sel);
    const Scalar inv = 1 / Scalar(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_indices(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= bound) throw std::invalid_argument(std::string(what) + " index out of range");
    if (k > 0 && idx[k] <= idx[k - 1]) {
      throw std::invalid_argument(std::string(what) + " indices not strictly increasing");
    }
  }
}

template <typename T>
Matrix<T> submatrix(const Matrix<T>& m, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs |rows| = |cols|");
  check_indices(rows, m.rows(), "row");
  check_indices(cols, m.cols(), "column");
  Matrix<T> sub(rows.size(), cols.size(), rows.empty() ? T{} : m(rows[0], cols[0]));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  }
  return sub;
}

}  // namespace

std::vector<Vector> kernel_basis(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  return rref(a).size();
}

std::optional<Vector> solve(const ScalarMatrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  ScalarMatrix aug(m.rows(), m.cols() + 1, Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix aug(n, 2 * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  ScalarMatrix inv(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

Scalar determinant(const ScalarMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  ScalarMatrix a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      a.swap_rows(sel, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Scalar f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Polynomial determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(0, 1);
  if (n > 24) throw std::invalid_argument("symbolic determinant limited to 24x24");
  const std::size_t vars = m(0, 0).num_vars();
  // memo[mask] = det of rows (n - popcount(mask))..n-1 restricted to columns in mask
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t mask, std::size_t row) -> Polynomial {
    if (row == n) return Polynomial::constant(vars, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial acc(vars);
    int position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!m(row, j).is_zero()) {
        Polynomial term = m(row, j) * self(self, mask & ~(1u << j), row + 1);
        if (position % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  return rec(rec, full, 0);
}

Scalar minor(const ScalarMatrix& m, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols) {
  return determinant(submatrix(m, rows, cols));
}

Polynomial minor(const PolyMatrix& m, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols) {
  if (rows.empty() && cols.empty()) {
    return Polynomial::constant(m.rows() == 0 ? 0 : m(0, 0).num_vars(), 1);
  }
  return determinant(submatrix(m, rows, cols));
}

void RowSpace::reduce(Vector& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p] == 0) continue;
    const Scalar f = row[p];
    const Vector& r = rows_[k];
    for (std::size_t j = p; j < width_; ++j) {
      if (r[j] != 0) row[j] -= f * r[j];
    }
  }
}

bool RowSpace::add(Vector row) {
  if (row.size() != width_) throw std::invalid_argument("row width mismatch");
  reduce(row);
  std::size_t p = 0;
  while (p < width_ && row[p] == 0) ++p;
  if (p == width_) return false;
  const Scalar inv = 1 / row[p];
  for (std::size_t j = p; j < width_; ++j) row[j] *= inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(Vector row) const {
  if (row.size() != width_) throw std::invalid_argument("row width mismatch");
  reduce(row);
  for (const auto& x : row) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace covariant
