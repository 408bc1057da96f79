#ifndef COVARIANT_FUNDAMENTAL_WEIGHTS_HPP
#define COVARIANT_FUNDAMENTAL_WEIGHTS_HPP

#include "covariant/groups.hpp"

#include <span>
#include <vector>

namespace covariant {

/// Coefficients k_i of a weight in the fundamental-weight basis phi_i.
///
///   GL, Sp, and O for i < r (odd n) or i < r - 1 (even n):
///       phi_i = eps_1 + .. + eps_i
///   O, n = 2r + 1:  phi_r     = (eps_1 + .. + eps_r) / 2
///   O, n = 2r:      phi_{r-1} = (eps_1 + .. + eps_r) / 2
///                   phi_r     = (eps_1 + .. + eps_{r-1} - eps_r) / 2
///
/// For O with n = 2 the torus is SO(2) and phi_1 = eps_1.
std::vector<Scalar> to_phi(const Scenario& s, std::span<const Scalar> eps);
std::vector<Scalar> to_eps(const Scenario& s, std::span<const Scalar> phi);

/// Dominant-weight coordinates as integers. Throws std::domain_error when a
/// coefficient is not integral.
std::vector<long> integral_phi(const Scenario& s, const Weight& w);
Weight weight_from_phi(const Scenario& s, std::span<const long> k);

}  // namespace covariant

#endif  // COVARIANT_FUNDAMENTAL_WEIGHTS_HPP
