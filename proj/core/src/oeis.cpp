#include "subgame/oeis.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace subgame {

namespace {

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::string bfile_name(const std::string& id) {
  if (id.size() < 2 || (id[0] != 'A' && id[0] != 'a')) {
    throw UnknownSequenceError("not an OEIS id: '" + id + "'");
  }
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') throw UnknownSequenceError("not an OEIS id: '" + id + "'");
  }
  return "b" + id.substr(1) + ".txt";
}

BFile parse_bfile(std::string_view text, const std::string& id) {
  BFile out{id, {}, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::int64_t n = 0;
    std::int64_t v = 0;
    if (!(ls >> n >> v)) {
      throw std::invalid_argument(id + " b-file line " + std::to_string(lineno) + " is malformed");
    }
    out.terms.emplace_back(n, v);
  }
  return out;
}

std::filesystem::path default_bundled_dir() {
  const std::filesystem::path src = std::filesystem::path(SUBGAME_SOURCE_DATA_DIR) / "oeis";
  if (std::filesystem::exists(src)) return src;
  return std::filesystem::path(SUBGAME_INSTALL_DATA_DIR) / "oeis";
}

OeisClient::OeisClient() : bundled_dir_(default_bundled_dir()) {
  if (const char* env = std::getenv("SUBGAME_OEIS_CACHE"); env && *env) cache_dir_ = env;
}

BFile OeisClient::load(const std::string& id) const {
  const std::string name = bfile_name(id);
  if (fetcher_) {
    if (auto text = fetcher_(id)) {
      BFile f = parse_bfile(*text, id);
      if (!f.terms.empty()) {
        if (cache_dir_) {
          std::error_code ec;
          std::filesystem::create_directories(*cache_dir_, ec);
          std::ofstream(*cache_dir_ / name) << *text;
        }
        f.source = "live";
        return f;
      }
    }
  }
  if (cache_dir_) {
    if (auto text = read_file(*cache_dir_ / name)) {
      BFile f = parse_bfile(*text, id);
      f.source = "cache";
      return f;
    }
  }
  if (auto text = read_file(bundled_dir_ / name)) {
    BFile f = parse_bfile(*text, id);
    f.source = "bundled";
    return f;
  }
  throw UnknownSequenceError("no b-file for " + id + " in " + bundled_dir_.string());
}

MatchReport oeis_check(const BFile& reference, std::int64_t offset,
                       const std::vector<std::int64_t>& computed) {
  MatchReport r;
  r.id = reference.id;
  r.source = reference.source;
  r.match = true;
  for (const auto& [n, v] : reference.terms) {
    if (n < offset) continue;
    const auto k = static_cast<std::uint64_t>(n - offset);
    if (k >= computed.size()) continue;
    ++r.compared;
    if (computed[k] != v) {
      r.match = false;
      r.first_mismatch = n;
      r.expected = v;
      r.got = computed[k];
      break;
    }
  }
  if (r.compared == 0) r.match = false;
  return r;
}

MatchReport oeis_check(const std::string& id, std::int64_t offset,
                       const std::vector<std::int64_t>& computed, const OeisClient& client) {
  return oeis_check(client.load(id), offset, computed);
}

}  // namespace subgame
