#pragma once

#include <string>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// A sequence t_1..t_n with 1 <= t_i <= i, encoding the factorization
/// pi = <t_1,1> * <t_2,2> * ... * <t_n,n> of a permutation into
/// transpositions (rightmost factor applied first). Fixed points of the
/// array count the cycles of the encoded permutation.
class TranspositionArray {
 public:
  TranspositionArray() = default;
  /// Throws std::invalid_argument unless 1 <= t_i <= i for every i.
  explicit TranspositionArray(std::vector<int> entries);

  int size() const { return static_cast<int>(t_.size()); }
  int operator[](int i) const { return t_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& entries() const { return t_; }

  /// Membership in the star set: t_i = i forces some later j with t_j = i.
  /// Star arrays are exactly the images of derangements.
  bool is_star() const;
  int fixed_point_count() const;

  bool operator==(const TranspositionArray&) const = default;
  auto operator<=>(const TranspositionArray&) const = default;

 private:
  std::vector<int> t_;
};

/// Unique array with pi = <t_1,1> * ... * <t_n,n>; peels factors from i = n
/// down to 1.
TranspositionArray to_transposition_array(const Permutation& pi);

/// Evaluates the factorization; exact inverse of to_transposition_array.
Permutation from_transposition_array(const TranspositionArray& t);

TranspositionArray parse_transposition_array(const std::string& text);
std::string format_transposition_array(const TranspositionArray& t);

}  // namespace permlab
