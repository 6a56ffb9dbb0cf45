#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subgame {

class UnknownSequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BFile {
  std::string id;  // "A001608"
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;  // (n, a(n)) in file order
  std::string source;  // "live", "cache" or "bundled"
};

// "n value" lines; '#' comments and blank lines are skipped.
BFile parse_bfile(std::string_view text, const std::string& id);

// Looks up b-files: live fetch (when a fetcher is installed), then the cache directory,
// then the bundled snapshots. A failed fetch falls through silently.
class OeisClient {
 public:
  // Returns the b-file text, or nothing on any network failure.
  using Fetcher = std::function<std::optional<std::string>(const std::string& id)>;

  // Cache directory from SUBGAME_OEIS_CACHE when set.
  OeisClient();

  void set_cache_dir(std::filesystem::path dir) { cache_dir_ = std::move(dir); }
  void set_bundled_dir(std::filesystem::path dir) { bundled_dir_ = std::move(dir); }
  void set_fetcher(Fetcher f) { fetcher_ = std::move(f); }

  const std::filesystem::path& bundled_dir() const { return bundled_dir_; }
  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }

  // Throws UnknownSequenceError when no source has the id.
  BFile load(const std::string& id) const;

 private:
  std::filesystem::path bundled_dir_;
  std::optional<std::filesystem::path> cache_dir_;
  Fetcher fetcher_;
};

// Source-tree data when present, else the installed copy.
std::filesystem::path default_bundled_dir();

// "b001608.txt" for "A001608".
std::string bfile_name(const std::string& id);

struct MatchReport {
  std::string id;
  std::string source;
  bool match = false;
  std::uint64_t compared = 0;
  std::optional<std::int64_t> first_mismatch;  // index n of the first difference
  std::int64_t expected = 0;
  std::int64_t got = 0;
};

// Compares computed[k] against a(offset + k) over the indices both sides cover.
MatchReport oeis_check(const BFile& reference, std::int64_t offset,
                       const std::vector<std::int64_t>& computed);
MatchReport oeis_check(const std::string& id, std::int64_t offset,
                       const std::vector<std::int64_t>& computed,
                       const OeisClient& client = OeisClient());

}  // namespace subgame
