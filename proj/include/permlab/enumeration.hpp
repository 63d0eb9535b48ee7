#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permlab/bigint.hpp"
#include "permlab/permutation.hpp"
#include "permlab/statistics.hpp"

namespace permlab {

inline constexpr int kDefaultEnumerationCap = 11;
inline constexpr int kHardEnumerationLimit = 12;

/// Lexicographic stream over all permutations of {1..n} extending a fixed
/// prefix of distinct values. Usage:
///
///   PermutationStream s(n, prefix);
///   while (s.next()) use(s.current());
///
/// current() refers to internal storage and is invalidated by next().
class PermutationStream {
 public:
  explicit PermutationStream(int n, std::vector<int> prefix = {});

  bool next();
  const Permutation& current() const { return cur_; }

 private:
  Permutation cur_;
  size_t prefix_len_ = 0;
  bool started_ = false;
  bool done_ = false;
};

template <typename F>
void for_each_permutation(int n, const std::vector<int>& prefix, F&& f) {
  PermutationStream s(n, prefix);
  while (s.next()) f(s.current());
}

template <typename F>
void for_each_permutation(int n, F&& f) {
  for_each_permutation(n, {}, std::forward<F>(f));
}

/// Exact counts of a statistic over S_n; keys with zero count are omitted
/// and the values sum to n!.
struct DistributionTable {
  int n = 0;
  std::map<int, BigInt> counts;

  BigInt total() const;
  BigInt at(int k) const;  // 0 for missing keys
  bool operator==(const DistributionTable&) const = default;
};

/// Exact joint counts of a statistic pair over S_n.
struct JointTable {
  int n = 0;
  std::map<std::pair<int, int>, BigInt> counts;

  BigInt total() const;
  BigInt at(int a, int b) const;
  DistributionTable marginal_first() const;
  DistributionTable marginal_second() const;
  bool operator==(const JointTable&) const = default;
};

/// Brute-force tables. `shards` >= 2 splits the scan by first value across
/// threads; the merged result is independent of the shard count.
DistributionTable distribution(Stat s, int n, int shards = 1);
JointTable joint_distribution(Stat a, Stat b, int n, int shards = 1);

/// Total number of occurrences over S_n: sum of k * count(k).
BigInt popularity(Stat s, int n, int shards = 1);

/// The exact integer sum_{k=2..n} n!/k, i.e. n! * (H_n - 1).
BigInt harmonic_popularity(int n);

/// Signless Stirling numbers of the first kind c(n,k) for
/// 0 <= k <= n <= n_max, from c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1),
/// c(0,0) = 1 and c(n,0) = 0 for n >= 1.
std::vector<std::vector<BigInt>> stirling_table(int n_max);

/// Rows n = 0..n_max of the des2 counting triangle, entries k = 0..n/2,
/// from a(n,k) = n a(n-1,k) + (n-1) a(n-2,k-1) - (n-1) a(n-2,k) with
/// a(n,0) = 1. Every entry is checked nonnegative.
std::vector<std::vector<BigInt>> des2_recurrence(int n_max);

/// Coefficients n! [x^n y^k] of exp(x(1-y)) / (1-x)^y, computed with exact
/// rationals; integrality and nonnegativity are asserted, as is vanishing
/// beyond k = n/2. rows[n] has entries k = 0..n/2.
struct SeriesTable {
  int n_max = 0;
  std::vector<std::vector<BigInt>> rows;
};

SeriesTable egf_a2_coefficients(int n_max);

DistributionTable distribution_from_row(int n, const std::vector<BigInt>& row);

enum class OeisSequence { A001705, A132393, A136394 };

OeisSequence oeis_from_name(std::string_view name);  // throws std::invalid_argument
std::string_view oeis_name(OeisSequence seq);

/// Terms regenerated from this library's own formulas, in storage order:
/// A001705 from n = 1 (harmonic popularity), A132393 row by row from n = 0,
/// A136394-aligned des2 triangle row by row from n = 1.
std::vector<BigInt> oeis_terms(OeisSequence seq, int count);

}  // namespace permlab
