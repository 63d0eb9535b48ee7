#include "permlab/transposition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "permlab/errors.hpp"

namespace permlab {

TranspositionArray::TranspositionArray(std::vector<int> entries) : t_(std::move(entries)) {
  for (size_t i = 0; i < t_.size(); ++i) {
    if (t_[i] < 1 || t_[i] > static_cast<int>(i) + 1)
      throw std::invalid_argument("transposition array entry t_" + std::to_string(i + 1) +
                                  " = " + std::to_string(t_[i]) + " outside [1, " +
                                  std::to_string(i + 1) + "]");
  }
}

bool TranspositionArray::is_star() const {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    if ((*this)[i] != i) continue;
    bool covered = false;
    for (int j = i + 1; j <= n && !covered; ++j) covered = ((*this)[j] == i);
    if (!covered) return false;
  }
  return true;
}

int TranspositionArray::fixed_point_count() const {
  int f = 0;
  for (int i = 1; i <= size(); ++i) f += ((*this)[i] == i);
  return f;
}

TranspositionArray to_transposition_array(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> cur(pi.one_line());          // cur[p-1] = image of p
  std::vector<int> pos(static_cast<size_t>(n) + 1);  // pos[v] = position of v
  for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(cur[static_cast<size_t>(i) - 1])] = i;

  std::vector<int> t(static_cast<size_t>(n));
  // Peel factors from the top: with everything above i cleared, the current
  // product permutes [1,i], so the preimage of i is <= i. Right-multiplying
  // by <j,i> swaps the entries at positions j and i.
  for (int i = n; i >= 1; --i) {
    int j = pos[static_cast<size_t>(i)];
    detail::require(j <= i, "transposition peel escaped its range");
    t[static_cast<size_t>(i) - 1] = j;
    if (j != i) {
      std::swap(cur[static_cast<size_t>(j) - 1], cur[static_cast<size_t>(i) - 1]);
      pos[static_cast<size_t>(cur[static_cast<size_t>(j) - 1])] = j;
      pos[static_cast<size_t>(cur[static_cast<size_t>(i) - 1])] = i;
    }
  }
  return TranspositionArray(std::move(t));
}

Permutation from_transposition_array(const TranspositionArray& t) {
  const int n = t.size();
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  // Fold the factors left to right; appending <t_i,i> on the right swaps
  // the entries at positions t_i and i.
  for (int i = 1; i <= n; ++i)
    if (t[i] != i) std::swap(v[static_cast<size_t>(t[i]) - 1], v[static_cast<size_t>(i) - 1]);
  return Permutation(std::move(v));
}

TranspositionArray parse_transposition_array(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  // Same compact digit form as permutations ("112" == "1 1 2").
  if (tokens.size() == 1 && tokens[0].size() > 1 &&
      std::all_of(tokens[0].begin(), tokens[0].end(),
                  [](char c) { return c >= '1' && c <= '9'; })) {
    std::vector<int> digits;
    for (char c : tokens[0]) digits.push_back(c - '0');
    return TranspositionArray(std::move(digits));
  }

  std::vector<int> entries;
  for (const std::string& tok : tokens) {
    try {
      size_t pos = 0;
      int x = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      entries.push_back(x);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad token '" + tok + "' in transposition array text");
    }
  }
  return TranspositionArray(std::move(entries));
}

std::string format_transposition_array(const TranspositionArray& t) {
  std::ostringstream out;
  for (int i = 1; i <= t.size(); ++i) {
    if (i > 1) out << ' ';
    out << t[i];
  }
  return out.str();
}

}  // namespace permlab
