#include "permlab/statistics.hpp"

#include <stdexcept>

#include "permlab/mesh.hpp"

namespace permlab {

const std::vector<Stat>& all_stats() {
  static const std::vector<Stat> v{Stat::des,  Stat::exc,  Stat::fix,  Stat::cyc,
                                   Stat::pcyc, Stat::lrmax, Stat::des0, Stat::des1,
                                   Stat::des2, Stat::pdes, Stat::pex};
  return v;
}

std::string_view stat_name(Stat s) {
  switch (s) {
    case Stat::des: return "des";
    case Stat::exc: return "exc";
    case Stat::fix: return "fix";
    case Stat::cyc: return "cyc";
    case Stat::pcyc: return "pcyc";
    case Stat::lrmax: return "lrmax";
    case Stat::des0: return "des0";
    case Stat::des1: return "des1";
    case Stat::des2: return "des2";
    case Stat::pdes: return "pdes";
    case Stat::pex: return "pex";
  }
  return "?";
}

Stat stat_from_name(std::string_view name) {
  for (Stat s : all_stats())
    if (stat_name(s) == name) return s;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::vector<int> pex_positions(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (pi(i) <= i) continue;
    bool blocked = false;
    for (int j = 1; j < i && !blocked; ++j) blocked = (i <= pi(j) && pi(j) < pi(i));
    if (!blocked) out.push_back(i);
  }
  return out;
}

namespace {

long long descent_count(const Permutation& pi) {
  long long c = 0;
  for (int i = 1; i < pi.size(); ++i) c += pi(i) > pi(i + 1);
  return c;
}

long long excedance_count(const Permutation& pi) {
  long long c = 0;
  for (int i = 1; i <= pi.size(); ++i) c += pi(i) > i;
  return c;
}

long long fixed_count(const Permutation& pi) {
  long long c = 0;
  for (int i = 1; i <= pi.size(); ++i) c += pi(i) == i;
  return c;
}

long long cycle_count(const Permutation& pi) {
  const int n = pi.size();
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  long long c = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[static_cast<size_t>(i)]) continue;
    ++c;
    for (int x = i; !visited[static_cast<size_t>(x)]; x = pi(x)) visited[static_cast<size_t>(x)] = 1;
  }
  return c;
}

long long lrmax_count(const Permutation& pi) {
  long long c = 0;
  int best = 0;
  for (int i = 1; i <= pi.size(); ++i)
    if (pi(i) > best) best = pi(i), ++c;
  return c;
}

// Direct pure-descent scan (descent with no earlier value in the closed
// interval [pi_{i+1}, pi_i]); independent of the mesh engine on purpose.
long long pure_descent_count(const Permutation& pi) {
  long long c = 0;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi(i) <= pi(i + 1)) continue;
    bool blocked = false;
    for (int j = 1; j < i && !blocked; ++j)
      blocked = (pi(i + 1) <= pi(j) && pi(j) <= pi(i));
    if (!blocked) ++c;
  }
  return c;
}

}  // namespace

long long statistic(Stat s, const Permutation& pi) {
  switch (s) {
    case Stat::des: return descent_count(pi);
    case Stat::exc: return excedance_count(pi);
    case Stat::fix: return fixed_count(pi);
    case Stat::cyc: return cycle_count(pi);
    case Stat::pcyc: return cycle_count(pi) - fixed_count(pi);
    case Stat::lrmax: return lrmax_count(pi);
    case Stat::des0: return count_mesh(builtin_p(0), pi);
    case Stat::des1: return count_mesh(builtin_p(1), pi);
    case Stat::des2: return count_mesh(builtin_p(2), pi);
    case Stat::pdes: return pure_descent_count(pi);
    case Stat::pex: return static_cast<long long>(pex_positions(pi).size());
  }
  throw std::invalid_argument("unknown statistic");
}

}  // namespace permlab
