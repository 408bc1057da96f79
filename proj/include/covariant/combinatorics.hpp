#ifndef COVARIANT_COMBINATORICS_HPP
#define COVARIANT_COMBINATORICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace covariant {

using IndexList = std::vector<std::size_t>;

/// All k-subsets of {0, .., n-1} in lexicographic order.
std::vector<IndexList> combinations(std::size_t n, std::size_t k);

/// Sign (+1/-1) of the permutation given as a list of distinct values; the
/// values need not be 0..n-1, only their relative order matters.
int permutation_sign(const std::vector<std::size_t>& values);

/// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

/// Number of multisets of size k from n kinds, saturating at SIZE_MAX.
std::size_t multiset_count(std::size_t n, std::size_t k);

/// Complement of a sorted subset of {0, .., n-1}.
IndexList complement(const IndexList& subset, std::size_t n);

/// "1,3,4" from {0,2,3}.
std::string one_based(const IndexList& idx);

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace covariant

#endif  // COVARIANT_COMBINATORICS_HPP
