#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace subgame {

// Packed bit string. Bit i lives in word i/64 at position i%64.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n, bool value = false);

  // Parses a string of '0'/'1' characters; anything else throws std::invalid_argument.
  static BitString from_string(std::string_view text);
  // Low `width` bits of v, most significant first (bit width-1 of v becomes index 0).
  static BitString from_uint(std::uint64_t v, std::size_t width);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }

  void push_back(bool v);
  void append(const BitString& other);
  void reserve(std::size_t n) { words_.reserve((n + 63) / 64); }
  void clear() {
    words_.clear();
    size_ = 0;
  }

  BitString substr(std::size_t pos, std::size_t len) const;
  BitString complement() const;
  BitString repeat(std::size_t times) const;
  BitString rotate_left(std::size_t k) const;

  // Inverse of from_uint; requires size() <= 64.
  std::uint64_t to_uint() const;
  std::string to_string() const;

  std::size_t count_ones() const;
  bool all_ones() const { return count_ones() == size_; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }
  // Lexicographic on the bit sequence, shorter-prefix first.
  friend bool operator<(const BitString& a, const BitString& b);

  std::size_t hash() const;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

inline BitString operator+(BitString a, const BitString& b) {
  a.append(b);
  return a;
}

}  // namespace subgame

template <>
struct std::hash<subgame::BitString> {
  std::size_t operator()(const subgame::BitString& b) const noexcept { return b.hash(); }
};
