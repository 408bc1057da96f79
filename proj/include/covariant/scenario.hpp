#ifndef COVARIANT_SCENARIO_HPP
#define COVARIANT_SCENARIO_HPP

#include "covariant/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace covariant {

enum class GroupKind { GL, O, Sp };

std::string to_string(GroupKind g);
/// Accepts "gl", "o", "sp" (case-insensitive).
GroupKind parse_group(std::string_view name);

/// G acting on W = lV + mV* with n = dim V.
///
/// Variable universe (0-based here, 1-based in labels): the n*l entries
/// x_i^j of the coordinate matrix of lV, column by column (x_1^1 .. x_n^1,
/// x_1^2, ...), followed by the m*n entries a_i^j of the coordinate matrix
/// of mV*, row by row (a_1^1 .. a_1^n, a_2^1, ...).
struct Scenario {
  GroupKind group = GroupKind::GL;
  int n = 1;
  int l = 0;
  int m = 0;

  /// Validating constructor: n >= 1, l, m >= 0, Sp needs even n, O and Sp
  /// need m = 0. Throws std::invalid_argument with a usage message.
  static Scenario make(GroupKind group, int n, int l, int m = 0);

  /// Rank of the maximal torus of G: n for GL, floor(n/2) otherwise.
  int rank() const { return group == GroupKind::GL ? n : n / 2; }
  std::size_t num_vars() const { return static_cast<std::size_t>(n * l + m * n); }
  std::size_t num_copies() const { return static_cast<std::size_t>(l + m); }

  /// Index of x_{row}^{copy} (row in [0,n), copy in [0,l)).
  std::size_t x_var(int row, int copy) const { return static_cast<std::size_t>(copy * n + row); }
  /// Index of a_{copy}^{col} (copy in [0,m), col in [0,n)).
  std::size_t a_var(int copy, int col) const {
    return static_cast<std::size_t>(n * l + copy * n + col);
  }
  bool is_x(std::size_t var) const { return var < static_cast<std::size_t>(n * l); }
  /// Copy index in [0, l + m): V-copies first, then V*-copies.
  std::size_t copy_of(std::size_t var) const;

  std::vector<std::string> variable_names() const;
  std::string describe() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace covariant

#endif  // COVARIANT_SCENARIO_HPP
