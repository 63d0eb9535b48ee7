#pragma once

#include <set>
#include <utility>

#include "permlab/permutation.hpp"

namespace permlab {

/// A mesh pattern: a base permutation of length k together with a set of
/// shaded unit squares (a,b), 0 <= a,b <= k, of its (k+1) x (k+1) grid.
/// An occurrence in pi is a classical occurrence of the base whose shaded
/// regions contain no point of pi.
struct MeshPattern {
  Permutation base;
  std::set<std::pair<int, int>> shaded;

  MeshPattern(Permutation base_, std::set<std::pair<int, int>> shaded_);
};

/// Descent variants on base 21: the middle column fully shaded plus one
/// extra square at height i in the left column (p_i) or right column
/// (p'_i), i in {0,1,2}. p_1 is the pure descent; the top of a p_2 is a
/// left-to-right maximum.
const MeshPattern& builtin_p(int i);
const MeshPattern& builtin_p_prime(int i);

/// Number of occurrences of `p` in `pi`. Enumerates all index tuples; a
/// shaded square (a,b) forbids points strictly between the a-th and
/// (a+1)-th chosen positions and strictly between the b-th and (b+1)-th
/// smallest chosen values, with sentinels 0 and n+1 on both axes.
long long count_mesh(const MeshPattern& p, const Permutation& pi);

}  // namespace permlab
