#include "permlab/bijections.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "permlab/enumeration.hpp"
#include "permlab/errors.hpp"
#include "permlab/statistics.hpp"

namespace permlab {

namespace {

void require_derangement(const Permutation& pi, const char* who) {
  if (!pi.is_derangement())
    throw std::invalid_argument(std::string(who) + ": input is not a derangement");
}

}  // namespace

Des2Decomposition des2_decompose(const Permutation& pi) {
  const int n = pi.size();

  // Tops: descent positions whose value is a left-to-right maximum. They
  // come out in ascending value order automatically.
  std::vector<int> tops;
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    const bool lr = pi(i) > best;
    if (lr) best = pi(i);
    if (lr && i < n && pi(i) > pi(i + 1)) tops.push_back(i);
  }

  Des2Decomposition dec;
  const int first_top = tops.empty() ? n + 1 : tops.front();
  for (int i = 1; i < first_top; ++i) dec.prefix.push_back(pi(i));

  for (size_t j = 0; j < tops.size(); ++j) {
    Des2Decomposition::Block blk;
    blk.top = pi(tops[j]);
    int q = tops[j] + 1;
    while (q <= n && pi(q) < blk.top) blk.below.push_back(pi(q)), ++q;
    const int stop = (j + 1 < tops.size()) ? tops[j + 1] : n + 1;
    for (; q < stop; ++q) blk.between.push_back(pi(q));
    dec.blocks.push_back(std::move(blk));
  }

  // Structural invariants of the decomposition; all must be unreachable.
  auto increasing = [](const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  detail::require(increasing(dec.prefix), "des2 prefix not increasing");
  if (!dec.blocks.empty() && !dec.prefix.empty())
    detail::require(dec.prefix.back() < dec.blocks.front().top,
                    "des2 prefix not below the first top");
  for (size_t j = 0; j < dec.blocks.size(); ++j) {
    const auto& blk = dec.blocks[j];
    detail::require(!blk.below.empty(), "des2 block without a descent run");
    detail::require(increasing(blk.between), "des2 B block not increasing");
    if (!blk.between.empty()) {
      detail::require(blk.top < blk.between.front(), "des2 B block not above its top");
      if (j + 1 < dec.blocks.size())
        detail::require(blk.between.back() < dec.blocks[j + 1].top,
                        "des2 B block not below the next top");
    }
  }
  return dec;
}

Permutation phi(const Permutation& pi) {
  const auto dec = des2_decompose(pi);
  std::vector<int> v(static_cast<size_t>(pi.size()));
  for (int x = 1; x <= pi.size(); ++x) v[static_cast<size_t>(x) - 1] = x;
  for (const auto& blk : dec.blocks) {
    int prev = blk.top;
    for (int x : blk.below) {
      v[static_cast<size_t>(prev) - 1] = x;
      prev = x;
    }
    v[static_cast<size_t>(prev) - 1] = blk.top;  // close the cycle
  }
  return Permutation(std::move(v));
}

Permutation phi_inv(const Permutation& sigma) {
  const auto dec = cycle_decomposition(sigma);

  std::vector<int> fixed;
  std::vector<std::vector<int>> words;  // pure cycles, max-first, maxima ascending
  for (const auto& c : dec.cycles) {
    if (c.size() == 1)
      fixed.push_back(c.front());
    else
      words.push_back(c);
  }

  // Fixed points go into the gap bounded by the neighbouring tops.
  std::vector<int> v;
  v.reserve(static_cast<size_t>(sigma.size()));
  size_t f = 0;
  for (const auto& w : words) {
    while (f < fixed.size() && fixed[f] < w.front()) v.push_back(fixed[f++]);
    v.insert(v.end(), w.begin(), w.end());
  }
  while (f < fixed.size()) v.push_back(fixed[f++]);
  return Permutation(std::move(v));
}

int FreeSquareGrid::label(int i, int j) const {
  if (column_excluded(i)) return 0;
  const auto& r = rows(i);
  auto it = std::lower_bound(r.begin(), r.end(), j);
  if (it == r.end() || *it != j) return 0;
  return static_cast<int>(it - r.begin()) + 1;
}

FreeSquareGrid free_square_grid(const Permutation& pi) {
  require_derangement(pi, "free_square_grid");
  const int n = pi.size();

  std::vector<char> pure(static_cast<size_t>(n) + 1, 0);
  for (int i : pex_positions(pi)) pure[static_cast<size_t>(i)] = 1;
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);  // pos[v] = pi^{-1}(v)
  for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(pi(i))] = i;

  FreeSquareGrid grid;
  grid.n = n;
  grid.excluded.assign(static_cast<size_t>(n), 0);
  grid.free_rows.assign(static_cast<size_t>(n), {});

  for (int i = 1; i <= n; ++i) {
    // (i): skip the column when its position or value is a pure excedance.
    if (pure[static_cast<size_t>(i)] || pure[static_cast<size_t>(pi(i))]) {
      grid.excluded[static_cast<size_t>(i) - 1] = 1;
      continue;
    }
    auto& rows = grid.free_rows[static_cast<size_t>(i) - 1];
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;                                  // (ii)
      if (pos[static_cast<size_t>(j)] > i) continue;         // (iii): j occurs right of column i
      if (pure[static_cast<size_t>(j)] && j < i && pos[static_cast<size_t>(j)] < i)
        continue;                                            // (iv)
      if (pos[static_cast<size_t>(j)] < i && j > i) {        // (v)
        bool all_right = true;
        for (int val = i; val < j && all_right; ++val)
          all_right = pos[static_cast<size_t>(val)] > i;
        if (all_right) continue;
      }
      rows.push_back(j);
    }
    detail::require(grid.label(i, pi(i)) > 0, "square (i, pi_i) must be free");
  }
  return grid;
}

TranspositionArray lambda_map(const Permutation& pi) {
  require_derangement(pi, "lambda_map");
  const int n = pi.size();

  std::vector<char> pure(static_cast<size_t>(n) + 1, 0);
  const auto pex = pex_positions(pi);
  for (int i : pex) pure[static_cast<size_t>(i)] = 1;
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(pi(i))] = i;

  // The three column classes partition [1,n]: a pure-excedance position
  // cannot carry a pure-excedance value.
  for (int i = 1; i <= n; ++i)
    detail::require(!(pure[static_cast<size_t>(i)] && pure[static_cast<size_t>(pi(i))]),
                    "pure excedance mapped onto a pure excedance");
  for (int p : pex)
    detail::require(pos[static_cast<size_t>(p)] > p, "pure-excedance value found left of its position");

  const FreeSquareGrid grid = free_square_grid(pi);

  std::vector<int> lam(static_cast<size_t>(n), 0);
  for (int p : pex) {
    lam[static_cast<size_t>(p) - 1] = p;
    lam[static_cast<size_t>(pos[static_cast<size_t>(p)]) - 1] = p;
  }

  for (int i = 1; i <= n; ++i) {
    if (pure[static_cast<size_t>(i)] || pure[static_cast<size_t>(pi(i))]) continue;
    const int ell = grid.label(i, pi(i));
    // Eligible values below i: drop pure excedances already completed on
    // the left (value and its preimage both before column i); take the
    // ell-th smallest of what remains.
    int remaining = ell;
    int chosen = 0;
    for (int v = 1; v < i && chosen == 0; ++v) {
      if (pure[static_cast<size_t>(v)] && v < i && pos[static_cast<size_t>(v)] < i) continue;
      if (--remaining == 0) chosen = v;
    }
    detail::require(chosen > 0, "free-square label exceeds the eligible value pool");
    lam[static_cast<size_t>(i) - 1] = chosen;
  }

  for (int i = 1; i <= n; ++i)
    detail::require(lam[static_cast<size_t>(i) - 1] >= 1 && lam[static_cast<size_t>(i) - 1] <= i,
                    "lambda entry escaped [1, i]");

  TranspositionArray t{std::move(lam)};
  detail::require(t.is_star(), "lambda image is not a star array");
  detail::require(t.fixed_point_count() == static_cast<int>(pex.size()),
                  "lambda fixed points != pex");
  return t;
}

namespace {

using InverseTable = std::map<std::vector<int>, std::vector<int>>;

const InverseTable& lambda_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<InverseTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto table = std::make_unique<InverseTable>();
    for_each_permutation(n, [&](const Permutation& p) {
      if (!p.is_derangement()) return;
      auto key = lambda_map(p).entries();
      auto [_, inserted] = table->emplace(std::move(key), p.one_line());
      detail::require(inserted, "lambda_map is not injective");
    });
    slot = std::move(table);
  }
  return *slot;
}

}  // namespace

Permutation lambda_inv(const TranspositionArray& t, int cap) {
  if (!t.is_star())
    throw std::invalid_argument("lambda_inv: array is not in the star set");
  const int n = t.size();
  if (n > cap)
    throw std::invalid_argument("lambda_inv: length " + std::to_string(n) +
                                " above the inversion cap " + std::to_string(cap));
  const auto& table = lambda_table(n);
  auto it = table.find(t.entries());
  detail::require(it != table.end(), "star array missing from the lambda table");
  return Permutation(it->second);
}

Permutation psi(const Permutation& pi) {
  require_derangement(pi, "psi");
  Permutation out = from_transposition_array(lambda_map(pi));
  detail::require(out.is_derangement(), "psi image has a fixed point");
  return out;
}

Permutation psi_paper_variant(const Permutation& pi) {
  require_derangement(pi, "psi_paper_variant");
  return phi(from_transposition_array(lambda_map(pi)));
}

Permutation psi_bar(const Permutation& pi) {
  auto [core, fixed] = strip_fixed_points(pi);
  return insert_fixed_points(psi(core), fixed);
}

Permutation foata(const Permutation& pi) {
  const auto dec = cycle_decomposition(pi);
  std::vector<int> v;
  v.reserve(static_cast<size_t>(pi.size()));
  for (const auto& c : dec.cycles) v.insert(v.end(), c.begin(), c.end());
  return Permutation(std::move(v));
}

}  // namespace permlab
