#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace permlab {

class PermutationStream;

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based throughout; n = 0 (the empty permutation) is legal everywhere.
/// Instances are immutable after construction.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `one_line` is a bijection of {1..n}; throws
  /// std::invalid_argument naming the offending value otherwise.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(v_.size()); }
  /// Image of position i, 1 <= i <= size().
  int operator()(int i) const { return v_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& one_line() const { return v_; }

  bool is_identity() const;
  bool is_derangement() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct unchecked_t {};
  Permutation(std::vector<int> v, unchecked_t) : v_(std::move(v)) {}
  friend class PermutationStream;

  std::vector<int> v_;
};

/// Parses whitespace- or comma-separated 1-based values. A single token of
/// two or more digits ("312") is read one value per digit when that yields a
/// bijection, so small permutations can be written compactly.
Permutation parse_permutation(const std::string& text);

/// Space-separated one-line form; empty string for n = 0.
std::string format_permutation(const Permutation& p);

/// Product convention: (sigma * pi)(i) = sigma(pi(i)).
Permutation compose(const Permutation& sigma, const Permutation& pi);
Permutation inverse(const Permutation& p);

enum class Symmetry { reverse, complement, inverse, reverse_complement };

Symmetry symmetry_from_name(const std::string& name);
const char* symmetry_name(Symmetry s);
Permutation apply_symmetry(const Permutation& p, Symmetry s);

/// Disjoint-orbit decomposition in canonical order: every orbit is written
/// with its maximum first, and orbits are sorted by maximum, ascending.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  int cyc() const { return static_cast<int>(cycles.size()); }
  int fix() const;
  int pcyc() const { return cyc() - fix(); }
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Shifts every value >= x up by one and appends x; grows the length by one.
/// Requires 1 <= x <= n + 1.
Permutation insert_last(const Permutation& p, int x);

/// Deletes the fixed points and rescales the rest to a derangement; returns
/// the derangement together with the sorted fixed-point positions.
std::pair<Permutation, std::vector<int>> strip_fixed_points(const Permutation& p);

/// Exact inverse of strip_fixed_points: embeds the derangement into
/// {1..m+|fixed|} minus `fixed` (order-preserving on positions and values)
/// and pins every i in `fixed`. Throws if `derangement` has a fixed point or
/// `fixed` is out of range.
Permutation insert_fixed_points(const Permutation& derangement,
                                const std::vector<int>& fixed);

}  // namespace permlab
