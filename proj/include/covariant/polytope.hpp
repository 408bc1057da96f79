#ifndef COVARIANT_POLYTOPE_HPP
#define COVARIANT_POLYTOPE_HPP

#include "covariant/convex.hpp"
#include "covariant/random.hpp"
#include "covariant/scenario.hpp"

#include <string>
#include <vector>

namespace covariant {

/// Polytopes in epsilon coordinates of the torus of G (dimension n for GL,
/// r otherwise).
///
///   Phi      conv(+-eps_1, .., +-eps_q)
///   Delta    GL:   conv of eps_1, (eps_1+eps_2)/2, .., (eps_1+..+eps_n)/n,
///                  -eps_n, .., (-eps_n-..-eps_1)/n, and 0
///            Sp/B: conv(0, eps_1, (eps_1+eps_2)/2, .., (eps_1+..+eps_r)/r)
///            D:    the same plus (eps_1+..+eps_{r-1}-eps_r)/r
///   chamber  rows a with a.x >= 0: x_i >= x_{i+1} (GL), plus x_r >= 0 (B, C),
///            or x_i >= x_{i+1} for i < r-1 and x_{r-1} >= +-x_r (D)
struct PolytopeSpec {
  std::vector<Vector> phi_vertices;
  std::vector<Vector> delta_vertices;
  std::vector<Vector> chamber;
};

/// Throws std::invalid_argument for O with n <= 2.
PolytopeSpec build_polytopes(const Scenario& s);

bool in_chamber(const PolytopeSpec& spec, const Vector& x);
bool in_phi_cap_chamber(const PolytopeSpec& spec, const Vector& x);

/// Random rational point of Phi intersected with the chamber: a convex
/// combination of the Phi vertices with denominator at most 20, moved into
/// the chamber by the Weyl group (sorting, and sign changes: all of them
/// for B/C, an even number for D).
Vector sample_phi_cap_chamber(const Scenario& s, const PolytopeSpec& spec, Rng& rng);

struct PolytopeFailure {
  std::string kind;  // "sample" or "vertex"
  std::string point;
};

struct PolytopeInclusionReport {
  std::size_t samples = 0;
  std::size_t vertices = 0;
  std::vector<PolytopeFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Samples of Phi cap chamber must lie in Delta (exact LP), and every Delta
/// vertex must lie in Phi cap chamber.
PolytopeInclusionReport polytope_inclusion_check(const Scenario& s, int samples, std::uint64_t seed);

std::string format_vector(const Vector& v);

}  // namespace covariant

#endif  // COVARIANT_POLYTOPE_HPP
