#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torelli/mcg.hpp"

namespace torelli::verify {

/// One suite case; ids are stable and unique within a run, reports are
/// sorted lexicographically on them.
struct SuiteCase {
  std::string id;
  std::string status;  // pass | fail | error | informative-pass | informative-fail
  std::string detail;
};

struct SuiteResult {
  std::string name;
  int pass = 0;  // pass + informative-pass
  int fail = 0;  // fail + error + informative-fail
  double wall_ms = 0.0;
  std::vector<SuiteCase> cases;
};

/// informative-* statuses never gate.
bool is_gating_failure(const SuiteCase& c);

struct RunParams {
  int g_max = 8;
  int n_max = 8;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct ConventionCandidate {
  int twist_direction;
  bool passed;
  std::string first_failing_case;  // empty for the winner
};

struct ConventionSearchResult {
  Convention chosen;
  std::vector<ConventionCandidate> candidates;
};

/// Tries both twist directions against the pinning checks (the first
/// twist-vs-slide lemma case, the T-square law, and the tailed T^2 normal
/// generator at g=5). Exactly one candidate must survive; otherwise throws
/// std::runtime_error with a diagnostic table of all candidates.
ConventionSearchResult convention_search();

const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const RunParams& params, const Convention& conv);

struct VerificationReport {
  std::uint64_t seed = 0;
  ConventionSearchResult convention;
  std::vector<SuiteResult> suites;
};

/// Convention search followed by every suite in canonical order.
VerificationReport run_all(const RunParams& params);

bool has_gating_failures(const VerificationReport& report);

/// JSON rendering, schema "torelli-verify/1". Identical params and seed give
/// byte-identical output except for the wall_ms timing fields.
std::string report_to_json(const VerificationReport& report);

/// Seeded property run over the word algebra: free-reduction idempotence,
/// associativity, inverse cancellation, substitution homomorphism and the
/// parser round trip. Returns one message per failing check.
std::vector<std::string> word_property_failures(std::uint64_t seed, int cases_per_property = 200);

/// Deterministic RNG wrapper; mt19937_64 output is pinned by the standard,
/// so reports are reproducible across platforms.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
  std::mt19937_64 eng_;
};

/// Random freely reduced word over E/F at size n, length <= max_len.
Word random_ef_word(SeededRng& rng, int n, int max_len);

}  // namespace torelli::verify
