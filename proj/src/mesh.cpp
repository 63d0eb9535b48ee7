#include "permlab/mesh.hpp"

#include <algorithm>
#include <stdexcept>

#include "permlab/errors.hpp"

namespace permlab {

MeshPattern::MeshPattern(Permutation base_, std::set<std::pair<int, int>> shaded_)
    : base(std::move(base_)), shaded(std::move(shaded_)) {
  const int k = base.size();
  for (auto [a, b] : shaded)
    if (a < 0 || a > k || b < 0 || b > k)
      throw std::invalid_argument("shaded square (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") outside [0," +
                                  std::to_string(k) + "]^2");
}

namespace {

MeshPattern make_descent_variant(int i, bool right_column) {
  std::set<std::pair<int, int>> shaded{{1, 0}, {1, 1}, {1, 2}};
  shaded.insert({right_column ? 2 : 0, i});
  return MeshPattern(Permutation({2, 1}), std::move(shaded));
}

}  // namespace

const MeshPattern& builtin_p(int i) {
  static const MeshPattern p[3] = {make_descent_variant(0, false),
                                   make_descent_variant(1, false),
                                   make_descent_variant(2, false)};
  if (i < 0 || i > 2) throw std::invalid_argument("p_i index must be 0, 1 or 2");
  return p[i];
}

const MeshPattern& builtin_p_prime(int i) {
  static const MeshPattern p[3] = {make_descent_variant(0, true),
                                   make_descent_variant(1, true),
                                   make_descent_variant(2, true)};
  if (i < 0 || i > 2) throw std::invalid_argument("p'_i index must be 0, 1 or 2");
  return p[i];
}

long long count_mesh(const MeshPattern& p, const Permutation& pi) {
  const int k = p.base.size();
  const int n = pi.size();
  if (k > n) return 0;

  long long count = 0;
  std::vector<int> idx(static_cast<size_t>(k));  // chosen positions, 1-based, ascending
  for (int s = 0; s < k; ++s) idx[static_cast<size_t>(s)] = s + 1;

  std::vector<int> sorted_vals(static_cast<size_t>(k));
  for (;;) {
    // Classical occurrence: chosen values order-isomorphic to the base.
    bool iso = true;
    for (int s = 0; s < k && iso; ++s)
      for (int t = s + 1; t < k && iso; ++t)
        iso = (p.base(s + 1) < p.base(t + 1)) ==
              (pi(idx[static_cast<size_t>(s)]) < pi(idx[static_cast<size_t>(t)]));

    if (iso) {
      for (int s = 0; s < k; ++s) sorted_vals[static_cast<size_t>(s)] = pi(idx[static_cast<size_t>(s)]);
      std::sort(sorted_vals.begin(), sorted_vals.end());

      auto pos_bound = [&](int a) {  // sentinel 0 below, n+1 above
        return a == 0 ? 0 : (a == k + 1 ? n + 1 : idx[static_cast<size_t>(a) - 1]);
      };
      auto val_bound = [&](int b) {
        return b == 0 ? 0 : (b == k + 1 ? n + 1 : sorted_vals[static_cast<size_t>(b) - 1]);
      };

      bool clean = true;
      for (auto [a, b] : p.shaded) {
        const int plo = pos_bound(a), phi = pos_bound(a + 1);
        const int vlo = val_bound(b), vhi = val_bound(b + 1);
        for (int j = plo + 1; j < phi && clean; ++j)
          clean = !(vlo < pi(j) && pi(j) < vhi);
        if (!clean) break;
      }
      count += clean;
    }

    // next k-combination of {1..n}
    int s = k - 1;
    while (s >= 0 && idx[static_cast<size_t>(s)] == n - (k - 1 - s)) --s;
    if (s < 0) break;
    ++idx[static_cast<size_t>(s)];
    for (int t = s + 1; t < k; ++t) idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t) - 1] + 1;
  }
  return count;
}

}  // namespace permlab
