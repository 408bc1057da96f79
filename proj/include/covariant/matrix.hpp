#ifndef COVARIANT_MATRIX_HPP
#define COVARIANT_MATRIX_HPP

#include "covariant/polynomial.hpp"
#include "covariant/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace covariant {

/// Dense rectangular matrix over an exact ring (Scalar or Polynomial).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.empty() ? T{} : data_.front());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Polynomial>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& a);
bool is_zero(const ScalarMatrix& a);

}  // namespace covariant

#endif  // COVARIANT_MATRIX_HPP
