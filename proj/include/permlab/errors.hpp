#pragma once

#include <stdexcept>
#include <string>

namespace permlab::detail {

// Internal invariant check. Stays active in release builds: the library's
// value is exactness, so a silent wrong answer is worse than a throw.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error("permlab internal invariant violated: " + msg);
}

}  // namespace permlab::detail
