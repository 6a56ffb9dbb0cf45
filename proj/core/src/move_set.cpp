#include "subgame/move_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace subgame {

MoveSet::MoveSet(std::vector<std::uint32_t> moves) : moves_(std::move(moves)) {
  if (moves_.empty()) throw std::invalid_argument("move set must be nonempty");
  std::sort(moves_.begin(), moves_.end());
  if (moves_.front() == 0) throw std::invalid_argument("moves must be positive");
  if (std::adjacent_find(moves_.begin(), moves_.end()) != moves_.end()) {
    throw std::invalid_argument("duplicate move");
  }
  g_ = 0;
  for (auto m : moves_) g_ = std::gcd(g_, m);
}

MoveSet MoveSet::parse(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || c == ' ' || c == '{' || c == '}' || c == '\t') {
      ++i;
      continue;
    }
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw std::invalid_argument("cannot parse moves '" + std::string(text) + "' at offset " +
                                  std::to_string(i));
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return MoveSet(std::move(out));
}

bool MoveSet::contains(std::uint32_t x) const {
  return std::binary_search(moves_.begin(), moves_.end(), x);
}

MoveSet MoveSet::with(std::uint32_t b) const {
  auto m = moves_;
  m.push_back(b);
  return MoveSet(std::move(m));
}

MoveSet MoveSet::scaled_down(std::uint32_t g) const {
  if (g == 0 || g_ % g != 0) throw std::invalid_argument("scaled_down: g does not divide gcd");
  auto m = moves_;
  for (auto& x : m) x /= g;
  return MoveSet(std::move(m));
}

std::string MoveSet::to_csv() const {
  std::string s;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(moves_[i]);
  }
  return s;
}

std::string MoveSet::to_string() const { return "{" + to_csv() + "}"; }

Seed normalize_seed(const BitString& raw, std::uint32_t alpha) {
  if (raw.size() >= alpha) return Seed{raw.substr(raw.size() - alpha, alpha)};
  return Seed{BitString(alpha - raw.size(), true) + raw};
}

Seed normalize_seed(const BitString& raw, const MoveSet& a) { return normalize_seed(raw, a.alpha()); }

Seed mode_seed(PlayMode mode, const MoveSet& a) {
  if (mode == PlayMode::kGreedy) return Seed{BitString(a.alpha(), false)};
  return Seed{BitString(a.min(), false) + BitString(a.alpha() - a.min(), true)};
}

}  // namespace subgame
