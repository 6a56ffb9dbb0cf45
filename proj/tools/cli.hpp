#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <subgame/move_set.hpp>
#include <subgame/oeis.hpp>

namespace cli {

enum class Format { kText, kJson, kCsv };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUsage = 2;

// Bad flag values found after parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  Format format = Format::kText;
  unsigned threads = 1;
  std::uint64_t budget = 1'000'000'000;
  bool full_ranges = false;
  std::optional<std::string> oeis_cache;
  bool live = false;
};

Format parse_format(const std::string& s);
subgame::MoveSet parse_moves(const std::string& s);
// Raw 0/1 bits, a pattern such as "0^2 1 0 1^2 0", or "misere" / "greedy".
subgame::Seed parse_seed(const std::string& s, const subgame::MoveSet& a);

subgame::OeisClient make_oeis_client(const Common& c);
// Installs a live b-file fetcher when the build has one; false otherwise.
bool install_live_fetcher(subgame::OeisClient& client);

int run_analyze(const Common& c, const std::string& moves, const std::string& seed,
                std::optional<std::uint64_t> horizon, std::ostream& out);
int run_seeds(const Common& c, const std::string& moves, std::ostream& out);
int run_theorem(const Common& c, const std::string& family, const std::string& params,
                const std::string& seed, std::optional<std::uint32_t> sweep, std::ostream& out);
int run_scan(const Common& c, const std::string& target, std::uint32_t max, const std::string& seeds,
             std::uint64_t sample, std::uint64_t rng_seed, std::ostream& out);
int run_superpoly(const Common& c, const std::string& what, std::uint32_t n, std::uint32_t b, std::uint32_t d,
                  std::ostream& out);
int run_oeis(const Common& c, std::ostream& out);
int run_figure(const Common& c, int id, const std::string& moves, std::ostream& out);

}  // namespace cli
