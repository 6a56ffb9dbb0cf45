#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgame/engine.hpp"
#include "subgame/oeis.hpp"

namespace subgame {

// Claim ids carried by counterexample records.
namespace claims {
inline constexpr const char* kLinearBound = "linear-bound";          // per({a,b,c}) < 2c
inline constexpr const char* kPeriodBound = "period-bound";          // N + p <= (beta+1)2^(alpha-|A|)
inline constexpr const char* kQuadraticBound = "quadratic-bound";    // per(A,S) < c^2
inline constexpr const char* kAbcConditions = "abc-conditions";      // conditions vs engine
inline constexpr const char* kAbcCorollary = "abc-corollary";        // translating-zeros test
inline constexpr const char* kExtensionConverse = "extension-converse";
}  // namespace claims

enum class SeedPolicy { kNone, kAll, kSampled };

struct ScanConfig {
  std::uint32_t max_c = 0;
  SeedPolicy seeds = SeedPolicy::kNone;
  std::uint64_t sample = 0;  // seeds per set under kSampled
  std::uint64_t rng_seed = 0x5eed;
  unsigned threads = 1;
};

struct CounterexampleRecord {
  MoveSet moves;
  Seed seed;
  std::uint64_t period = 0;
  std::uint64_t preperiod = 0;
  std::string claim;
  std::vector<std::int64_t> witness;

  // Re-runs the claim's check from (moves, seed) and compares the observation.
  bool replay() const;
};

// Empty when (A, S) satisfies the claim. Unseeded claims ignore S beyond its length.
std::optional<CounterexampleRecord> check_claim(const std::string& claim, const MoveSet& a,
                                                const Seed& s);

struct ScanReport {
  std::string target;
  nlohmann::json params;
  std::uint64_t checked = 0;
  std::vector<CounterexampleRecord> counterexamples;
  nlohmann::json summary;

  bool ok() const { return counterexamples.empty(); }
};

nlohmann::json record_to_json(const CounterexampleRecord& r);
CounterexampleRecord record_from_json(const nlohmann::json& j);
// Header line with target, params, counts and summary, then one line per record.
std::string report_to_jsonl(const ScanReport& r);
// One "claim,moves,seed,period,preperiod" row per record.
std::string report_to_csv(const ScanReport& r);

// per({a,b,c}) < 2c over a < b < c <= max_c with a + b != c; also checks the general
// period bound on every triple. Summary tracks the excluded {a, b, a+b} triples.
ScanReport scan_linear_bound(std::uint32_t max_c, unsigned threads = 1);

// per(A,S) < c^2 over a < b < c <= max_c with gcd 1, all seeds or sampled.
ScanReport scan_quadratic_bound(const ScanConfig& cfg);

// Division-algorithm variables for the per = b + c characterization.
struct AbcVariables {
  std::int64_t q = 0, r = 0;       // b = q a + r
  std::int64_t qc = 0, rc = 0;     // c = qc (a+b) + rc
  std::int64_t qa = 0, ra = 0;     // rc = qa (2a) + ra
  std::int64_t qc2 = 0, rc2 = 0;   // c - a = qc2 (a+b) + rc2
  std::int64_t qa2 = 0, ra2 = 0;   // rc2 = qa2 (2a) + ra2
};

AbcVariables abc_variables(std::uint32_t a, std::uint32_t b, std::uint32_t c);
// "i", "ii", "iii", or "" when no condition holds.
std::string abc_condition(const AbcVariables& v, std::uint32_t a);
// Triples where condition (i)'s last clause meets r = 0 or r_a' = 0.
bool abc_boundary(const AbcVariables& v);
// Engine: per = b + c and preperiod 0.
bool abc_truth(std::uint32_t a, std::uint32_t b, std::uint32_t c);
// w(b+c-i) = 1 for every i in [1, a].
bool abc_window_test(std::uint32_t a, std::uint32_t b, std::uint32_t c);

// Conditions vs engine over 1 < a < b < c <= max_c, plus the window test against
// (per | b+c and preperiod 0).
ScanReport scan_abc_per_bc(std::uint32_t max_c, unsigned threads = 1);

struct ConverseCheck {
  std::uint64_t period = 0;
  std::uint64_t preperiod = 0;
  bool all_extensions = false;  // p + x extends (A, S) for every x in A
  std::vector<std::uint32_t> failing;
};

ConverseCheck extension_converse(const MoveSet& a, const Seed& s);

// Every A with |A| <= 3 and alpha <= max_alpha, every seed: all extensions => N = 0.
ScanReport scan_extension_converse(std::uint32_t max_alpha, unsigned threads = 1);

struct ExceptionalSet {
  MoveSet moves;
  std::uint64_t max_period = 0;
  Seed seed;  // a seed realizing max_period
};

// gcd 1, (a+b) does not divide c, and max(P^A) > 2c, over c <= max_c.
std::vector<ExceptionalSet> find_superlinear_exceptions(std::uint32_t max_c, unsigned threads = 1);

// Perrin vs A001608, N' vs A113788, N vs A127687, squares-game zeros vs A030193.
std::vector<MatchReport> run_oeis_checks(const OeisClient& client = OeisClient());

}  // namespace subgame
