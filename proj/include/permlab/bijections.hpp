#pragma once

#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/transposition.hpp"

namespace permlab {

/// Block decomposition pi = B0 top_1 A_1 B_1 ... top_k A_k B_k where the
/// tops are the descent tops that are left-to-right maxima (one per p_2
/// occurrence, ascending), each A_j is the maximal run of values below its
/// top, and every B block is increasing and sandwiched between consecutive
/// tops.
struct Des2Decomposition {
  struct Block {
    int top = 0;
    std::vector<int> below;    // A_j: maximal run of values < top
    std::vector<int> between;  // B_j: increasing, between this top and the next
  };

  std::vector<int> prefix;  // B_0
  std::vector<Block> blocks;
};

Des2Decomposition des2_decompose(const Permutation& pi);

/// Product of the cycles <top_j, A_j...>; every B-block value becomes a
/// fixed point. Sends the des2 count to the pure-cycle count; bijective.
Permutation phi(const Permutation& pi);

/// Inverse of phi: pure cycles written max-first in ascending-maximum order,
/// fixed points redistributed into the gaps by value.
Permutation phi_inv(const Permutation& sigma);

/// Free squares of a derangement's grid. A column is excluded when its
/// position or its value is a pure-excedance position; in the remaining
/// columns the free squares are labeled 1,2,... bottom to top.
struct FreeSquareGrid {
  int n = 0;
  std::vector<char> excluded;              // index i-1 for column i
  std::vector<std::vector<int>> free_rows; // ascending rows per column

  bool column_excluded(int i) const { return excluded[static_cast<size_t>(i) - 1] != 0; }
  const std::vector<int>& rows(int i) const { return free_rows[static_cast<size_t>(i) - 1]; }
  /// 1-based bottom-up label, or 0 when (i,j) is unfree or the column is
  /// excluded.
  int label(int i, int j) const;
};

/// Throws std::invalid_argument if `pi` has a fixed point.
FreeSquareGrid free_square_grid(const Permutation& pi);

/// The derangement-to-star-array bijection. Pure-excedance positions become
/// fixed entries, their preimage columns repeat the value, and every other
/// column i takes the l-th smallest eligible value below i, where l is the
/// free-square label of (i, pi_i). fix(result) = pex(pi).
TranspositionArray lambda_map(const Permutation& pi);

inline constexpr int kLambdaInvDefaultCap = 9;

/// Table-based inverse of lambda_map (the forward map is inverted by
/// enumerating derangements once per length, cached). Throws for non-star
/// input or lengths above `cap`.
Permutation lambda_inv(const TranspositionArray& t, int cap = kLambdaInvDefaultCap);

/// Derangement bijection with cyc(psi(pi)) = pex(pi): evaluates the
/// factorization encoded by lambda_map(pi).
Permutation psi(const Permutation& pi);

/// Foil variant that additionally composes with phi. It does NOT satisfy
/// cyc = pex (first counterexample at length 3); kept so the failure is
/// reproducible.
Permutation psi_paper_variant(const Permutation& pi);

/// Extension of psi to all permutations: strip fixed points, apply psi,
/// reinsert. Transports (pex, fix) to (pcyc, fix); bijective.
Permutation psi_bar(const Permutation& pi);

/// Fundamental transformation: cycles written max-first in
/// ascending-maximum order, parentheses erased. Satisfies
/// des(pi) = exc(foata(pi)).
Permutation foata(const Permutation& pi);

}  // namespace permlab
