#include "covariant/matrix.hpp"

namespace covariant {

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  ScalarMatrix out(a.rows(), b.cols(), Scalar(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  ScalarMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a + Scalar(-1) * b;
}

ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& a) {
  ScalarMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
  }
  return out;
}

bool is_zero(const ScalarMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace covariant
