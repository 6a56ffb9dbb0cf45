#pragma once

// Reference implementations for tests: direct recurrence on int vectors and a naive
// (N, p) search. They share no code with the library.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brute {

// w(0..n-1); the seed string is left-padded with '1' to max(A).
inline std::vector<int> gen(const std::vector<unsigned>& a, const std::string& seed, std::size_t n) {
  const std::size_t al = *std::max_element(a.begin(), a.end());
  std::string s = seed.size() >= al ? seed.substr(seed.size() - al) : std::string(al - seed.size(), '1') + seed;
  std::vector<int> w;
  w.reserve(al + n);
  for (char c : s) w.push_back(c == '1');
  for (std::size_t i = 0; i < n; ++i) {
    int m = 1;
    for (unsigned x : a) m = std::min(m, w[al + i - x]);
    w.push_back(1 - m);
  }
  return {w.begin() + static_cast<std::ptrdiff_t>(al), w.end()};
}

inline std::string str(const std::vector<int>& w) {
  std::string s;
  for (int b : w) s += static_cast<char>('0' + b);
  return s;
}

// Smallest p whose tail agreement starts early enough to be witnessed twice in the window.
inline std::optional<std::pair<std::size_t, std::size_t>> periodicity(const std::vector<unsigned>& a,
                                                                      const std::string& seed,
                                                                      std::size_t horizon) {
  const std::size_t al = *std::max_element(a.begin(), a.end());
  const auto w = gen(a, seed, horizon);
  for (std::size_t p = 1; 3 * p + al < horizon; ++p) {
    std::size_t n = horizon - p;
    while (n > 0 && w[n - 1] == w[n - 1 + p]) --n;
    if (n + 2 * p + al <= horizon) return std::make_pair(n, p);
  }
  return std::nullopt;
}

}  // namespace brute
