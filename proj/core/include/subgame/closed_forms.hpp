#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgame/move_set.hpp"
#include "subgame/pattern.hpp"

namespace subgame {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Predicted structure of w^A for one solved family member.
struct OracleResult {
  std::string family;
  nlohmann::json params;
  MoveSet moves;
  std::optional<PatternExpr> pattern;  // absent when only (N, p) are stated
  std::uint64_t period = 0;
  std::uint64_t preperiod = 0;
  std::string tag;  // case label where the family has several
};

nlohmann::json oracle_to_json(const OracleResult& r);

// {a} with seed s: (~s s)^inf.
OracleResult cf_single(std::uint32_t a, const Seed& s);
// {2^(k+1) d : d | c} for a = 2^k c, c odd.
std::set<std::uint64_t> periods_single(std::uint32_t a);

// {a, b} with no seed.
OracleResult cf_pair(std::uint32_t a, std::uint32_t b);

// {1, b, c} with no seed; tag is the case "i" .. "ix".
OracleResult cf_1bc(std::uint32_t b, std::uint32_t c);

// {2s, 4s+1, 22s+2}: period 26s+3, preperiod 24s^2-4s-1 (s >= 2).
OracleResult cf_family_2s(std::uint32_t s);
// {k, k+2, 2k+3}: period 2, preperiod (3k^2-5)/2 (k >= 3 odd).
OracleResult cf_family_k(std::uint32_t k);
// Both families over s in [2, max_s] and odd k in [3, max_k].
std::vector<OracleResult> cf_known_3set_examples(std::uint32_t max_s = 6, std::uint32_t max_k = 15);

// {a, b, a+b} with no seed; tag "quadratic" when 1 <= b mod 2a < a, else "linear".
OracleResult cf_ab_apb(std::uint32_t a, std::uint32_t b);

}  // namespace subgame
