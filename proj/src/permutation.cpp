#include "permlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

void check_bijection(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int x : v) {
    if (x < 1 || x > n)
      throw std::invalid_argument("value " + std::to_string(x) +
                                  " out of range for length " + std::to_string(n));
    if (seen[static_cast<size_t>(x)])
      throw std::invalid_argument("duplicate value " + std::to_string(x));
    seen[static_cast<size_t>(x)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
  check_bijection(v_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), unchecked_t{});
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Permutation::is_derangement() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) == i) return false;
  return true;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (c == ',' && cur.empty())
        throw std::invalid_argument("empty token in permutation text");
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  // Compact digit form: a single multi-digit token is split per digit when
  // that reading is a bijection (only possible for n <= 9).
  if (tokens.size() == 1 && tokens[0].size() > 1 &&
      std::all_of(tokens[0].begin(), tokens[0].end(), [](char c) {
        return c >= '1' && c <= '9';
      })) {
    std::vector<int> digits;
    for (char c : tokens[0]) digits.push_back(c - '0');
    std::vector<char> seen(digits.size() + 1, 0);
    bool bijective = true;
    for (int d : digits) {
      if (d > static_cast<int>(digits.size()) || seen[static_cast<size_t>(d)]) {
        bijective = false;
        break;
      }
      seen[static_cast<size_t>(d)] = 1;
    }
    if (bijective) return Permutation(std::move(digits));
  }

  std::vector<int> values;
  values.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    try {
      size_t pos = 0;
      int x = std::stoi(tok, &pos);
      if (pos != tok.size() || x < 1) throw std::invalid_argument(tok);
      values.push_back(x);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad token '" + tok + "' in permutation text");
    }
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out << ' ';
    out << p(i);
  }
  return out.str();
}

Permutation compose(const Permutation& sigma, const Permutation& pi) {
  detail::require(sigma.size() == pi.size(), "compose: length mismatch");
  std::vector<int> v(static_cast<size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) v[static_cast<size_t>(i) - 1] = sigma(pi(i));
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(static_cast<size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) v[static_cast<size_t>(p(i)) - 1] = i;
  return Permutation(std::move(v));
}

Symmetry symmetry_from_name(const std::string& name) {
  if (name == "reverse") return Symmetry::reverse;
  if (name == "complement") return Symmetry::complement;
  if (name == "inverse") return Symmetry::inverse;
  if (name == "reverse_complement" || name == "reverse-complement")
    return Symmetry::reverse_complement;
  throw std::invalid_argument("unknown symmetry '" + name + "'");
}

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::reverse: return "reverse";
    case Symmetry::complement: return "complement";
    case Symmetry::inverse: return "inverse";
    case Symmetry::reverse_complement: return "reverse_complement";
  }
  return "?";
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
  const int n = p.size();
  std::vector<int> v(static_cast<size_t>(n));
  switch (s) {
    case Symmetry::reverse:
      for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = p(n + 1 - i);
      break;
    case Symmetry::complement:
      for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = n + 1 - p(i);
      break;
    case Symmetry::inverse:
      return inverse(p);
    case Symmetry::reverse_complement:
      for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = n + 1 - p(n + 1 - i);
      break;
  }
  return Permutation(std::move(v));
}

int CycleDecomposition::fix() const {
  int f = 0;
  for (const auto& c : cycles) f += (c.size() == 1);
  return f;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  CycleDecomposition dec;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    int mx = start;
    for (int x = p(start); x != start; x = p(x)) mx = std::max(mx, x);
    std::vector<int> orbit;
    int x = mx;
    do {
      visited[static_cast<size_t>(x)] = 1;
      orbit.push_back(x);
      x = p(x);
    } while (x != mx);
    dec.cycles.push_back(std::move(orbit));
  }
  std::sort(dec.cycles.begin(), dec.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return dec;
}

Permutation insert_last(const Permutation& p, int x) {
  const int n = p.size();
  if (x < 1 || x > n + 1)
    throw std::invalid_argument("insert_last: value " + std::to_string(x) +
                                " out of range [1, " + std::to_string(n + 1) + "]");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) v.push_back(p(i) >= x ? p(i) + 1 : p(i));
  v.push_back(x);
  return Permutation(std::move(v));
}

std::pair<Permutation, std::vector<int>> strip_fixed_points(const Permutation& p) {
  const int n = p.size();
  std::vector<int> fixed;
  std::vector<int> kept;  // non-fixed positions (== non-fixed values), ascending
  for (int i = 1; i <= n; ++i) (p(i) == i ? fixed : kept).push_back(i);

  // rank[v] = position of v in kept, 1-based; relabels both axes at once.
  std::vector<int> rank(static_cast<size_t>(n) + 1, 0);
  for (size_t r = 0; r < kept.size(); ++r) rank[static_cast<size_t>(kept[r])] = static_cast<int>(r) + 1;

  std::vector<int> v;
  v.reserve(kept.size());
  for (int pos : kept) v.push_back(rank[static_cast<size_t>(p(pos))]);
  Permutation d{std::move(v)};
  detail::require(d.is_derangement(), "strip_fixed_points produced a fixed point");
  return {std::move(d), std::move(fixed)};
}

Permutation insert_fixed_points(const Permutation& derangement,
                                const std::vector<int>& fixed) {
  if (!derangement.is_derangement())
    throw std::invalid_argument("insert_fixed_points: first argument has a fixed point");
  const int m = derangement.size();
  const int n = m + static_cast<int>(fixed.size());

  std::vector<char> is_fixed(static_cast<size_t>(n) + 1, 0);
  for (int i : fixed) {
    if (i < 1 || i > n)
      throw std::invalid_argument("insert_fixed_points: position " + std::to_string(i) +
                                  " out of range [1, " + std::to_string(n) + "]");
    if (is_fixed[static_cast<size_t>(i)])
      throw std::invalid_argument("insert_fixed_points: duplicate position " + std::to_string(i));
    is_fixed[static_cast<size_t>(i)] = 1;
  }

  std::vector<int> embed;  // order-preserving [1,m] -> [1,n] \ fixed
  embed.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= n; ++i)
    if (!is_fixed[static_cast<size_t>(i)]) embed.push_back(i);

  std::vector<int> v(static_cast<size_t>(n));
  for (int i : fixed) v[static_cast<size_t>(i) - 1] = i;
  for (int q = 1; q <= m; ++q)
    v[static_cast<size_t>(embed[static_cast<size_t>(q) - 1]) - 1] =
        embed[static_cast<size_t>(derangement(q)) - 1];
  return Permutation(std::move(v));
}

}  // namespace permlab
