#include "covariant/convex.hpp"

#include <stdexcept>

namespace covariant {

std::optional<Vector> convex_combination(std::span<const Scalar> point,
                                         const std::vector<Vector>& vertices) {
  const std::size_t dim = point.size();
  for (const auto& v : vertices) {
    if (v.size() != dim) throw std::invalid_argument("vertex dimension mismatch");
  }
  if (vertices.empty()) return std::nullopt;

  // Equality system A lambda = b with rows: coordinates, then sum(lambda) = 1.
  const std::size_t m = dim + 1;
  const std::size_t nv = vertices.size();
  const std::size_t ncols = nv + m;  // structural + artificial
  ScalarMatrix tab(m, ncols + 1, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) tab(i, j) = i < dim ? vertices[j][i] : Scalar(1);
    tab(i, ncols) = i < dim ? point[i] : Scalar(1);
    if (tab(i, ncols) < 0) {
      for (std::size_t j = 0; j < nv; ++j) tab(i, j) = -tab(i, j);
      tab(i, ncols) = -tab(i, ncols);
    }
    tab(i, nv + i) = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = nv + i;

  // Reduced costs for minimizing the sum of artificials.
  Vector cost(ncols + 1, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) cost[j] -= tab(i, j);
    cost[ncols] -= tab(i, ncols);
  }

  while (true) {
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) break;
    std::size_t leave = m;
    Scalar best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab(i, enter) <= 0) continue;
      Scalar ratio = tab(i, ncols) / tab(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    const Scalar piv = tab(leave, enter);
    for (std::size_t j = 0; j <= ncols; ++j) tab(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab(i, enter) == 0) continue;
      const Scalar f = tab(i, enter);
      for (std::size_t j = 0; j <= ncols; ++j) tab(i, j) -= f * tab(leave, j);
    }
    const Scalar f = cost[enter];
    for (std::size_t j = 0; j <= ncols; ++j) cost[j] -= f * tab(leave, j);
    basis[leave] = enter;
  }

  // The phase-one optimum is -cost[ncols]; feasible iff it is zero.
  if (cost[ncols] != 0) return std::nullopt;
  Vector lambda(nv, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < nv) lambda[basis[i]] = tab(i, ncols);
  }
  return lambda;
}

bool convex_membership(std::span<const Scalar> point, const std::vector<Vector>& vertices) {
  return convex_combination(point, vertices).has_value();
}

}  // namespace covariant
