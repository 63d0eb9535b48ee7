#include "permlab/render.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace permlab {

using ordered_json = nlohmann::ordered_json;

std::string to_csv(const DistributionTable& t) {
  std::ostringstream out;
  out << "n,k,count\n";
  for (const auto& [k, c] : t.counts) out << t.n << ',' << k << ',' << c.str() << '\n';
  return out.str();
}

std::string to_csv(const JointTable& t) {
  std::ostringstream out;
  out << "n,a,b,count\n";
  for (const auto& [ab, c] : t.counts)
    out << t.n << ',' << ab.first << ',' << ab.second << ',' << c.str() << '\n';
  return out.str();
}

std::string to_json(const DistributionTable& t, std::string_view stat,
                    std::string_view source) {
  ordered_json j;
  j["stat"] = std::string(stat);
  j["n"] = t.n;
  if (!source.empty()) j["source"] = std::string(source);
  ordered_json counts = ordered_json::object();
  for (const auto& [k, c] : t.counts) counts[std::to_string(k)] = c.str();
  j["counts"] = std::move(counts);
  return j.dump(2) + "\n";
}

std::string to_json(const JointTable& t, std::string_view stat_a,
                    std::string_view stat_b) {
  ordered_json j;
  j["stat_a"] = std::string(stat_a);
  j["stat_b"] = std::string(stat_b);
  j["n"] = t.n;
  ordered_json counts = ordered_json::object();
  for (const auto& [ab, c] : t.counts) {
    const std::string a = std::to_string(ab.first);
    if (!counts.contains(a)) counts[a] = ordered_json::object();
    counts[a][std::to_string(ab.second)] = c.str();
  }
  j["counts"] = std::move(counts);
  return j.dump(2) + "\n";
}

std::string to_text(const DistributionTable& t, std::string_view stat) {
  std::ostringstream out;
  out << stat << " over S_" << t.n << "\n";
  size_t width = 1;
  for (const auto& [k, c] : t.counts) width = std::max(width, c.str().size());
  for (const auto& [k, c] : t.counts) {
    std::string s = c.str();
    out << "  " << k << "  " << std::string(width - s.size(), ' ') << s << "\n";
  }
  out << "  total " << t.total().str() << "\n";
  return out.str();
}

std::string to_text(const JointTable& t, std::string_view stat_a, std::string_view stat_b) {
  std::ostringstream out;
  out << "(" << stat_a << ", " << stat_b << ") over S_" << t.n << "\n";
  for (const auto& [ab, c] : t.counts)
    out << "  (" << ab.first << ", " << ab.second << ")  " << c.str() << "\n";
  out << "  total " << t.total().str() << "\n";
  return out.str();
}

}  // namespace permlab
