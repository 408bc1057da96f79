#ifndef COVARIANT_WEIGHTS_HPP
#define COVARIANT_WEIGHTS_HPP

#include "covariant/generators.hpp"
#include "covariant/graded.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace covariant {

/// Integer coefficients (k_1, .., k_q) of a weight in the phi basis.
using PhiWeight = std::vector<long>;

inline constexpr int kDefaultNChiCap = 8;
inline constexpr int kDefaultMChiCap = 4;

/// Minimal degree of a monomial in the generators carrying weight chi:
///
///   Sp       k_1 + 2k_2 + .. + r k_r
///   O(2r+1)  k_1 + .. + (r-1)k_{r-1} + r k_r / 2           (k_r even)
///   O(2r)    k_1 + .. + (r-2)k_{r-2} + r (k_{r-1} + k_r) / 2
///            - min(k_{r-1}, k_r)                            (k_{r-1} + k_r even)
///   GL       degree of gl_minimal_presentation
///
/// Valid for l >= n (and m >= n for GL). Throws std::domain_error outside
/// that regime, for O with n <= 2, on a parity violation, and for weights
/// that are not dominant (negative k_i; GL allows any sign of k_n).
long n_chi_formula(const Scenario& s, const PhiWeight& chi);

/// Building blocks of GL weights of generator monomials:
///   alpha_i = phi_i          (deg i,     i = 1..n)
///   beta_j  = phi_j - phi_n  (deg n - j, j = 1..n-1),  beta_n = -phi_n (deg n)
struct PresentationStep {
  enum class Kind { Alpha, Beta };
  Kind kind = Kind::Alpha;
  int index = 1;
  long multiplicity = 0;

  friend bool operator==(const PresentationStep&, const PresentationStep&) = default;
};

std::string to_string(const PresentationStep& step);
int step_degree(int n, PresentationStep::Kind kind, int index);

struct Presentation {
  std::vector<PresentationStep> steps;  // nonzero multiplicities, alphas first
  long degree = 0;
};

/// Minimal-degree presentation of a GL weight through alpha/beta. Starts from
/// k_i alpha_i (i <= n/2) and k_j beta_j (n/2 < j < n), then corrects the phi_n
/// coordinate one unit at a time by the cheapest available move:
///   too high:  alpha_i -> beta_i (cost n - 2i) or add beta_n (cost n)
///   too low:   beta_j -> alpha_j (cost 2j - n) or add alpha_n (cost n)
/// Ties go to the smaller index. Throws std::domain_error if some k_i < 0 for
/// i < n.
Presentation gl_minimal_presentation(int n, const PhiWeight& chi);

/// Minimal total degree of a monomial in the generators whose weight is chi,
/// by exhaustive shortest-path search over partial weights (generators of
/// weight 0 are ignored). nullopt if nothing is found within degree_cap.
std::optional<long> n_chi_oracle(const GeneratorSet& gs, const PhiWeight& chi, long degree_cap = kDefaultNChiCap);

/// An upper bound for n(chi) read off from single-generator weights, usable
/// as a search cap independent of n_chi_formula: sum_i i k_i, plus n |k_n| for GL.
long n_chi_search_bound(const Scenario& s, const PhiWeight& chi);

/// Smallest t <= degree_cap with a nonzero U-invariant of weight chi in
/// degree t; nullopt if none. Throws ResourceLimitError past monomial_cap.
std::optional<int> m_chi_oracle(const Scenario& s, const PhiWeight& chi, int degree_cap = kDefaultMChiCap,
                                std::size_t monomial_cap = kDefaultMonomialCap);

/// Dimension of the U-invariants of degree t, summed per T(G)-weight.
std::map<Weight, std::size_t> u_invariant_weights(const Scenario& s, int t,
                                                  std::size_t monomial_cap = kDefaultMonomialCap);

/// Phi coordinates as a printable list "1,0,2".
std::string format_phi(const PhiWeight& chi);

/// Parses "1,0,-2".
PhiWeight parse_phi(const std::string& text);

}  // namespace covariant

#endif  // COVARIANT_WEIGHTS_HPP
