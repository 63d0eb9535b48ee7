#include "permlab/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "permlab/errors.hpp"

namespace permlab {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

PermutationStream::PermutationStream(int n, std::vector<int> prefix) {
  if (n < 0 || n > kHardEnumerationLimit)
    throw std::invalid_argument("permutation length " + std::to_string(n) +
                                " outside [0, " + std::to_string(kHardEnumerationLimit) + "]");
  if (prefix.size() > static_cast<size_t>(n))
    throw std::invalid_argument("prefix longer than the permutation");
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  for (int v : prefix) {
    if (v < 1 || v > n || used[static_cast<size_t>(v)])
      throw std::invalid_argument("invalid prefix value " + std::to_string(v));
    used[static_cast<size_t>(v)] = 1;
  }
  prefix_len_ = prefix.size();
  std::vector<int> buf = std::move(prefix);
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<size_t>(v)]) buf.push_back(v);
  cur_ = Permutation(std::move(buf), Permutation::unchecked_t{});
}

bool PermutationStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  auto& v = cur_.v_;
  if (std::next_permutation(v.begin() + static_cast<std::ptrdiff_t>(prefix_len_), v.end()))
    return true;
  done_ = true;
  return false;
}

BigInt DistributionTable::total() const {
  BigInt s = 0;
  for (const auto& [k, c] : counts) s += c;
  return s;
}

BigInt DistributionTable::at(int k) const {
  auto it = counts.find(k);
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt JointTable::total() const {
  BigInt s = 0;
  for (const auto& [k, c] : counts) s += c;
  return s;
}

BigInt JointTable::at(int a, int b) const {
  auto it = counts.find({a, b});
  return it == counts.end() ? BigInt(0) : it->second;
}

DistributionTable JointTable::marginal_first() const {
  DistributionTable t;
  t.n = n;
  for (const auto& [ab, c] : counts) t.counts[ab.first] += c;
  return t;
}

DistributionTable JointTable::marginal_second() const {
  DistributionTable t;
  t.n = n;
  for (const auto& [ab, c] : counts) t.counts[ab.second] += c;
  return t;
}

namespace {

void check_length(int n) {
  if (n < 0 || n > kHardEnumerationLimit)
    throw std::invalid_argument("length " + std::to_string(n) + " outside [0, " +
                                std::to_string(kHardEnumerationLimit) + "]");
}

// First values handled by shard s out of K, round-robin.
std::vector<int> shard_firsts(int n, int shard, int shards) {
  std::vector<int> out;
  for (int v = shard + 1; v <= n; v += shards) out.push_back(v);
  return out;
}

// Statistic values of the roster are bounded by n, so dense uint64 bins are
// exact for every feasible scan (n! < 2^63 far beyond the hard limit).
std::vector<uint64_t> scan_distribution(Stat s, int n, const std::vector<int>& firsts) {
  std::vector<uint64_t> acc(static_cast<size_t>(n) + 1, 0);
  for (int v : firsts)
    for_each_permutation(n, {v}, [&](const Permutation& p) {
      const long long k = statistic(s, p);
      detail::require(k >= 0 && k <= n, "statistic value escaped [0, n]");
      ++acc[static_cast<size_t>(k)];
    });
  return acc;
}

std::vector<uint64_t> scan_joint(Stat a, Stat b, int n, const std::vector<int>& firsts) {
  const size_t w = static_cast<size_t>(n) + 1;
  std::vector<uint64_t> acc(w * w, 0);
  for (int v : firsts)
    for_each_permutation(n, {v}, [&](const Permutation& p) {
      const long long ka = statistic(a, p), kb = statistic(b, p);
      detail::require(ka >= 0 && ka <= n && kb >= 0 && kb <= n,
                      "statistic value escaped [0, n]");
      ++acc[static_cast<size_t>(ka) * w + static_cast<size_t>(kb)];
    });
  return acc;
}

template <typename Scan>
std::vector<uint64_t> sharded(int n, int shards, Scan scan) {
  if (shards < 1) throw std::invalid_argument("shard count must be >= 1");
  if (n == 0 || shards == 1) {
    std::vector<int> all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    if (n == 0) return scan(std::vector<int>{});  // the single empty permutation
    return scan(all);
  }
  std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(shards));
  std::vector<std::thread> workers;
  for (int s = 0; s < shards; ++s)
    workers.emplace_back([&, s] { parts[static_cast<size_t>(s)] = scan(shard_firsts(n, s, shards)); });
  for (auto& w : workers) w.join();
  std::vector<uint64_t> acc = std::move(parts[0]);
  for (size_t s = 1; s < parts.size(); ++s)
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += parts[s][i];
  return acc;
}

}  // namespace

DistributionTable distribution(Stat s, int n, int shards) {
  check_length(n);
  const auto acc = sharded(n, shards, [&](const std::vector<int>& firsts) {
    if (firsts.empty() && n == 0) {
      std::vector<uint64_t> one(1, 0);
      for_each_permutation(0, [&](const Permutation& p) { one[static_cast<size_t>(statistic(s, p))]++; });
      return one;
    }
    return scan_distribution(s, n, firsts);
  });
  DistributionTable t;
  t.n = n;
  for (size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) t.counts[static_cast<int>(k)] = acc[k];
  return t;
}

JointTable joint_distribution(Stat a, Stat b, int n, int shards) {
  check_length(n);
  const size_t w = static_cast<size_t>(n) + 1;
  const auto acc = sharded(n, shards, [&](const std::vector<int>& firsts) {
    if (firsts.empty() && n == 0) {
      std::vector<uint64_t> one(1, 1);  // empty permutation: all statistics 0
      return one;
    }
    return scan_joint(a, b, n, firsts);
  });
  JointTable t;
  t.n = n;
  for (size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0)
      t.counts[{static_cast<int>(i / w), static_cast<int>(i % w)}] = acc[i];
  return t;
}

BigInt popularity(Stat s, int n, int shards) {
  const DistributionTable t = distribution(s, n, shards);
  BigInt sum = 0;
  for (const auto& [k, c] : t.counts) sum += BigInt(k) * c;
  return sum;
}

BigInt harmonic_popularity(int n) {
  const BigInt f = factorial(n);
  BigInt sum = 0;
  for (int k = 2; k <= n; ++k) {
    detail::require(f % k == 0, "n!/k not integral");
    sum += f / k;
  }
  return sum;
}

std::vector<std::vector<BigInt>> stirling_table(int n_max) {
  std::vector<std::vector<BigInt>> c(static_cast<size_t>(n_max) + 1);
  c[0] = {1};
  for (int n = 1; n <= n_max; ++n) {
    c[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
      BigInt v = c[static_cast<size_t>(n) - 1][static_cast<size_t>(k) - 1];
      if (k < n) v += BigInt(n - 1) * c[static_cast<size_t>(n) - 1][static_cast<size_t>(k)];
      c[static_cast<size_t>(n)][static_cast<size_t>(k)] = std::move(v);
    }
  }
  return c;
}

namespace {

BigInt triangle_entry(const std::vector<std::vector<BigInt>>& rows, int n, int k) {
  if (n < 0 || k < 0) return 0;
  const auto& row = rows[static_cast<size_t>(n)];
  if (k >= static_cast<int>(row.size())) return 0;
  return row[static_cast<size_t>(k)];
}

}  // namespace

std::vector<std::vector<BigInt>> des2_recurrence(int n_max) {
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto& row = a[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n / 2) + 1, 0);
    row[0] = 1;
    for (int k = 1; k <= n / 2; ++k) {
      BigInt v = BigInt(n) * triangle_entry(a, n - 1, k) +
                 BigInt(n - 1) * triangle_entry(a, n - 2, k - 1) -
                 BigInt(n - 1) * triangle_entry(a, n - 2, k);
      detail::require(v >= 0, "des2 recurrence produced a negative entry");
      row[static_cast<size_t>(k)] = std::move(v);
    }
  }
  return a;
}

namespace {

using Poly = std::vector<BigRat>;  // coefficients in y

Poly poly_scale(Poly p, const BigRat& c) {
  for (auto& x : p) x *= c;
  return p;
}

void poly_add_product(Poly& out, const Poly& a, const Poly& b) {
  if (out.size() < a.size() + b.size()) out.resize(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
}

}  // namespace

SeriesTable egf_a2_coefficients(int n_max) {
  // exp(x(1-y)): x^m coefficient is (1-y)^m / m!.
  std::vector<Poly> expo(static_cast<size_t>(n_max) + 1);
  expo[0] = {BigRat(1)};
  BigInt m_fact = 1;
  for (int m = 1; m <= n_max; ++m) {
    // (1-y)^m = (1-y)^{m-1} * (1-y), tracked without the 1/m! factor first.
    const Poly& prev = expo[static_cast<size_t>(m) - 1];
    Poly cur(static_cast<size_t>(m) + 1, BigRat(0));
    // prev already carries 1/(m-1)!; multiply by (1-y) then divide by m.
    for (size_t j = 0; j < prev.size(); ++j) {
      cur[j] += prev[j];
      cur[j + 1] -= prev[j];
    }
    for (auto& c : cur) c /= m;
    expo[static_cast<size_t>(m)] = std::move(cur);
    m_fact *= m;
  }

  // (1-x)^{-y}: x^m coefficient is y(y+1)...(y+m-1) / m!.
  std::vector<Poly> binom(static_cast<size_t>(n_max) + 1);
  binom[0] = {BigRat(1)};
  Poly rising = {BigRat(1)};  // rising factorial, degree m
  BigInt fact = 1;
  for (int m = 1; m <= n_max; ++m) {
    Poly next(rising.size() + 1, BigRat(0));
    for (size_t j = 0; j < rising.size(); ++j) {
      next[j + 1] += rising[j];                 // * y
      next[j] += rising[j] * BigRat(m - 1);     // * (m-1)
    }
    rising = std::move(next);
    fact *= m;
    binom[static_cast<size_t>(m)] = poly_scale(rising, BigRat(BigInt(1), fact));
  }

  SeriesTable table;
  table.n_max = n_max;
  table.rows.resize(static_cast<size_t>(n_max) + 1);
  BigInt n_fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) n_fact *= n;
    Poly coeff(1, BigRat(0));
    for (int m = 0; m <= n; ++m)
      poly_add_product(coeff, expo[static_cast<size_t>(m)], binom[static_cast<size_t>(n - m)]);

    auto& row = table.rows[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n / 2) + 1, 0);
    for (size_t k = 0; k < coeff.size(); ++k) {
      const BigRat scaled = coeff[k] * BigRat(n_fact);
      detail::require(denominator(scaled) == 1, "EGF coefficient not integral");
      const BigInt v = numerator(scaled);
      detail::require(v >= 0, "EGF coefficient negative");
      if (static_cast<int>(k) > n / 2)
        detail::require(v == 0, "EGF coefficient nonzero beyond n/2");
      else
        row[k] = v;
    }
  }
  return table;
}

DistributionTable distribution_from_row(int n, const std::vector<BigInt>& row) {
  DistributionTable t;
  t.n = n;
  for (size_t k = 0; k < row.size(); ++k)
    if (row[k] != 0) t.counts[static_cast<int>(k)] = row[k];
  return t;
}

OeisSequence oeis_from_name(std::string_view name) {
  if (name == "A001705") return OeisSequence::A001705;
  if (name == "A132393") return OeisSequence::A132393;
  if (name == "A136394") return OeisSequence::A136394;
  throw std::invalid_argument("unknown sequence '" + std::string(name) +
                              "' (expected A001705, A132393 or A136394)");
}

std::string_view oeis_name(OeisSequence seq) {
  switch (seq) {
    case OeisSequence::A001705: return "A001705";
    case OeisSequence::A132393: return "A132393";
    case OeisSequence::A136394: return "A136394";
  }
  return "?";
}

std::vector<BigInt> oeis_terms(OeisSequence seq, int count) {
  if (count < 0) throw std::invalid_argument("term count must be nonnegative");
  std::vector<BigInt> out;
  out.reserve(static_cast<size_t>(count));
  switch (seq) {
    case OeisSequence::A001705:
      for (int n = 1; static_cast<int>(out.size()) < count; ++n)
        out.push_back(harmonic_popularity(n));
      break;
    case OeisSequence::A132393: {
      // Triangle read by rows from n = 0, k = 0..n.
      int n_max = 0;
      while ((n_max + 1) * (n_max + 2) / 2 < count) ++n_max;
      const auto c = stirling_table(n_max);
      for (int n = 0; n <= n_max && static_cast<int>(out.size()) < count; ++n)
        for (int k = 0; k <= n && static_cast<int>(out.size()) < count; ++k)
          out.push_back(c[static_cast<size_t>(n)][static_cast<size_t>(k)]);
      break;
    }
    case OeisSequence::A136394: {
      // This library's des2 triangle read by rows from n = 1, k = 0..n/2.
      int n_max = 1, cells = 0;
      while (cells < count) cells += n_max / 2 + 1, ++n_max;
      const auto a = des2_recurrence(n_max);
      for (int n = 1; n <= n_max && static_cast<int>(out.size()) < count; ++n)
        for (int k = 0; k <= n / 2 && static_cast<int>(out.size()) < count; ++k)
          out.push_back(a[static_cast<size_t>(n)][static_cast<size_t>(k)]);
      break;
    }
  }
  return out;
}

}  // namespace permlab
