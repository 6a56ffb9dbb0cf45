#include "subgame/infinite.hpp"

#include <cmath>

namespace subgame {

namespace {

bool is_square(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

bool is_cube(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(x)));
  while (r > 0 && r * r * r > x) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= x) ++r;
  return r * r * r == x;
}

}  // namespace

InfiniteMoveSet InfiniteMoveSet::squares() { return {"squares", is_square}; }
InfiniteMoveSet InfiniteMoveSet::cubes() { return {"cubes", is_cube}; }
InfiniteMoveSet InfiniteMoveSet::all_positive() {
  return {"positive", [](std::uint64_t) { return true; }};
}

std::vector<std::uint64_t> InfiniteMoveSet::members_up_to(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x <= n; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

BitString generate_infinite(const InfiniteMoveSet& a, std::uint64_t n) {
  const auto members = a.members_up_to(n);
  BitString w(n);
  for (std::uint64_t m = 0; m < n; ++m) {
    bool win = false;
    for (auto x : members) {
      if (x > m) break;
      if (!w[m - x]) {
        win = true;
        break;
      }
    }
    w.set(m, win);
  }
  return w;
}

std::vector<std::uint64_t> losing_positions(const InfiniteMoveSet& a, std::uint64_t n) {
  const auto w = generate_infinite(a, n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < n; ++m) {
    if (!w[m]) out.push_back(m);
  }
  return out;
}

AperiodicityCertificate certify_aperiodic(const BitString& w, std::uint64_t max_span) {
  AperiodicityCertificate c{w.size(), max_span, true, 0, 0};
  const std::uint64_t len = w.size();
  for (std::uint64_t p = 1; p < max_span && p < len; ++p) {
    // Smallest N with w(m) = w(m+p) on [N, len-p).
    std::uint64_t n = len - p;
    while (n > 0 && w[n - 1] == w[n - 1 + p]) --n;
    if (n + p <= max_span) {
      c.holds = false;
      c.witness_preperiod = n;
      c.witness_period = p;
      return c;
    }
  }
  return c;
}

}  // namespace subgame
