#pragma once

#include <optional>
#include <string>
#include <vector>

namespace permlab {

enum class CheckStatus { pass, fail, refuted_as_expected };

std::string_view status_name(CheckStatus s);

struct Counterexample {
  int n = 0;
  std::vector<std::string> permutations;  // one-line forms involved
  std::string detail;                     // the mismatched values
};

/// Outcome of one named check. Foil checks invert the pass semantics: they
/// PASS (status refuted_as_expected) exactly when a counterexample exists.
struct VerificationReport {
  std::string id;
  int n_min = 1;
  int n_max = 0;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
  std::optional<Counterexample> counterexample;
  double wall_seconds = 0.0;

  bool acceptable() const { return status != CheckStatus::fail; }
};

/// All check identifiers, in canonical order.
const std::vector<std::string>& check_ids();
bool is_check_id(const std::string& id);
std::string check_summary(const std::string& id);

/// Default scan depth used by the CLI when --max-n is not given: 8 for the
/// theorem suites, 9 for the conjectures, 7 for the mesh symmetry class,
/// 3 for the fixed small-n remark.
int default_check_n_max(const std::string& id);

/// Runs one check over all lengths up to n_max (remark-noneq is pinned to
/// n = 3). Deterministic: the first counterexample in (n, lexicographic)
/// order is reported. Throws std::invalid_argument for unknown ids.
VerificationReport run_check(const std::string& id, int n_max);

std::string to_text(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& reports,
                    bool include_timing = true);

}  // namespace permlab
