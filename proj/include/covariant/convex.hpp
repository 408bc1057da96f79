#ifndef COVARIANT_CONVEX_HPP
#define COVARIANT_CONVEX_HPP

#include "covariant/linalg.hpp"

#include <optional>
#include <span>
#include <vector>

namespace covariant {

/// Convex weights lambda >= 0, sum lambda = 1, with sum lambda_i v_i = point,
/// found by an exact phase-one simplex (Bland's rule). nullopt iff the point
/// lies outside the hull. Throws std::invalid_argument on dimension mismatch.
std::optional<Vector> convex_combination(std::span<const Scalar> point,
                                         const std::vector<Vector>& vertices);

bool convex_membership(std::span<const Scalar> point, const std::vector<Vector>& vertices);

}  // namespace covariant

#endif  // COVARIANT_CONVEX_HPP
