#include "covariant/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace covariant {

std::string to_string(GroupKind g) {
  switch (g) {
    case GroupKind::GL:
      return "gl";
    case GroupKind::O:
      return "o";
    case GroupKind::Sp:
      return "sp";
  }
  return "?";
}

GroupKind parse_group(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "gl") return GroupKind::GL;
  if (lower == "o") return GroupKind::O;
  if (lower == "sp") return GroupKind::Sp;
  throw std::invalid_argument("unknown group '" + std::string(name) + "' (expected gl, o or sp)");
}

Scenario Scenario::make(GroupKind group, int n, int l, int m) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (l < 0 || m < 0) throw std::invalid_argument("l and m must be nonnegative");
  if (group == GroupKind::Sp && n % 2 != 0) throw std::invalid_argument("Sp requires even n");
  if (group != GroupKind::GL && m != 0) {
    throw std::invalid_argument(to_string(group) + " requires m = 0 (V* is isomorphic to V)");
  }
  return Scenario{group, n, l, m};
}

std::size_t Scenario::copy_of(std::size_t var) const {
  if (var >= num_vars()) throw std::out_of_range("variable index out of range");
  if (is_x(var)) return var / static_cast<std::size_t>(n);
  return static_cast<std::size_t>(l) + (var - static_cast<std::size_t>(n * l)) / static_cast<std::size_t>(n);
}

std::vector<std::string> Scenario::variable_names() const {
  std::vector<std::string> names;
  names.reserve(num_vars());
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) names.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  }
  return names;
}

std::string Scenario::describe() const {
  return "(" + to_string(group) + ", n=" + std::to_string(n) + ", l=" + std::to_string(l) +
         ", m=" + std::to_string(m) + ")";
}

}  // namespace covariant
