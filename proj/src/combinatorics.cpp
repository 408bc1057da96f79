#include "covariant/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace covariant {

std::vector<IndexList> combinations(std::size_t n, std::size_t k) {
  std::vector<IndexList> out;
  if (k > n) return out;
  IndexList cur(k);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int permutation_sign(const std::vector<std::size_t>& values) {
  int sign = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) sign = -sign;
    }
  }
  return sign;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t multiset_count(std::size_t n, std::size_t k) {
  // C(n + k - 1, k), computed incrementally
  if (k == 0) return 1;
  if (n == 0) return 0;
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - 1 + i) / i;
    if (acc > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(acc);
}

IndexList complement(const IndexList& subset, std::size_t n) {
  IndexList out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(subset.begin(), subset.end(), i)) out.push_back(i);
  }
  return out;
}

std::string one_based(const IndexList& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

}  // namespace covariant
