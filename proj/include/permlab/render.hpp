#pragma once

#include <string>
#include <string_view>

#include "permlab/enumeration.hpp"

namespace permlab {

// Deterministic table rendering shared by the CLI and the tests: rows in
// ascending key order, counts as decimal strings in JSON so consumers with
// fixed-width integers survive.

std::string to_csv(const DistributionTable& t);
std::string to_csv(const JointTable& t);

std::string to_json(const DistributionTable& t, std::string_view stat,
                    std::string_view source);
std::string to_json(const JointTable& t, std::string_view stat_a,
                    std::string_view stat_b);

std::string to_text(const DistributionTable& t, std::string_view stat);
std::string to_text(const JointTable& t, std::string_view stat_a,
                    std::string_view stat_b);

}  // namespace permlab
