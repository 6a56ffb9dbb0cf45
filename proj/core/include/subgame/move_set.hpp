#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "subgame/bits.hpp"

namespace subgame {

// A finite subtraction set: strictly increasing positive moves.
class MoveSet {
 public:
  MoveSet() = default;
  // Sorts the input; throws std::invalid_argument on empty input, zero, or duplicates.
  explicit MoveSet(std::vector<std::uint32_t> moves);
  MoveSet(std::initializer_list<std::uint32_t> moves)
      : MoveSet(std::vector<std::uint32_t>(moves)) {}

  // "2,4,7" or "{2, 4, 7}".
  static MoveSet parse(std::string_view text);

  const std::vector<std::uint32_t>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  std::uint32_t alpha() const { return moves_.back(); }
  std::uint32_t min() const { return moves_.front(); }
  std::uint32_t gcd() const { return g_; }
  bool contains(std::uint32_t x) const;

  MoveSet with(std::uint32_t b) const;
  // Every move divided by g; requires g | gcd().
  MoveSet scaled_down(std::uint32_t g) const;

  std::string to_string() const;  // "{2,4,7}"
  std::string to_csv() const;      // "2,4,7"

  friend bool operator==(const MoveSet& a, const MoveSet& b) { return a.moves_ == b.moves_; }
  friend bool operator<(const MoveSet& a, const MoveSet& b) { return a.moves_ < b.moves_; }

 private:
  std::vector<std::uint32_t> moves_;
  std::uint32_t g_ = 0;
};

// w on [-alpha, 0): bits[i] = w(-alpha + i). All ones means "no seed".
struct Seed {
  BitString bits;

  static Seed none(std::uint32_t alpha) { return Seed{BitString(alpha, true)}; }
  std::size_t size() const { return bits.size(); }
  bool is_none() const { return bits.all_ones(); }
  std::string to_string() const { return bits.to_string(); }

  friend bool operator==(const Seed& a, const Seed& b) { return a.bits == b.bits; }
};

// Left-pads with ones or keeps the last alpha bits.
Seed normalize_seed(const BitString& raw, const MoveSet& a);
Seed normalize_seed(const BitString& raw, std::uint32_t alpha);

enum class PlayMode { kMisere, kGreedy };

// Misere: 0^min(A) 1^(alpha-min(A)). Greedy: 0^alpha.
Seed mode_seed(PlayMode mode, const MoveSet& a);

}  // namespace subgame
