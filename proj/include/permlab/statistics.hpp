#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// The statistic roster. des0/des1/des2 count the mesh patterns p_0/p_1/p_2;
/// pdes is the pure descent evaluated by a direct scan (always equal to
/// des1, kept separate as a cross-check of the mesh engine); pex is the
/// pure excedance, which is not a mesh pattern.
enum class Stat { des, exc, fix, cyc, pcyc, lrmax, des0, des1, des2, pdes, pex };

const std::vector<Stat>& all_stats();
std::string_view stat_name(Stat s);
Stat stat_from_name(std::string_view name);  // throws std::invalid_argument

/// Positions i with pi_i > i and no j < i such that i <= pi_j < pi_i,
/// ascending.
std::vector<int> pex_positions(const Permutation& pi);

long long statistic(Stat s, const Permutation& pi);

}  // namespace permlab
