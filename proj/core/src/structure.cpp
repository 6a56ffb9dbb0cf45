#include "subgame/structure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace subgame {

std::vector<Component> decompose(const MoveSet& a, const Seed& s) {
  const std::uint32_t g = a.gcd();
  if (s.size() != a.alpha()) throw std::invalid_argument("decompose: seed not normalized");
  if (g == 1) return {Component{a, s}};
  const MoveSet reduced = a.scaled_down(g);
  const std::uint32_t len = a.alpha() / g;
  std::vector<Component> out;
  out.reserve(g);
  for (std::uint32_t i = 0; i < g; ++i) {
    BitString bits(len);
    for (std::uint32_t t = 0; t < len; ++t) bits.set(t, s.bits[t * g + i]);
    out.push_back(Component{reduced, Seed{std::move(bits)}});
  }
  return out;
}

BitString interleave(const std::vector<BitString>& parts, std::uint64_t n) {
  const std::uint64_t g = parts.size();
  BitString out(n);
  for (std::uint64_t k = 0; k < n; ++k) out.set(k, parts[k % g][k / g]);
  return out;
}

std::uint64_t checked_lcm(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t q = x / std::gcd(x, y);
  if (q != 0 && y > std::numeric_limits<std::uint64_t>::max() / q) {
    throw std::overflow_error("lcm exceeds 64 bits");
  }
  return q * y;
}

std::uint64_t linearity_period(const std::vector<std::uint64_t>& component_periods) {
  std::uint64_t l = 1;
  for (auto p : component_periods) l = checked_lcm(l, p);
  const std::uint64_t g = component_periods.size();
  if (g != 0 && l > std::numeric_limits<std::uint64_t>::max() / g) {
    throw std::overflow_error("linearity period exceeds 64 bits");
  }
  return g * l;
}

bool is_extension(const MoveSet& a, const Seed& s, std::uint32_t b, const EngineOptions& opt) {
  if (a.contains(b)) return true;
  const MoveSet ab = a.with(b);
  const Seed s2 = normalize_seed(s.bits, ab);
  const auto r1 = find_periodicity(a, s, opt);
  const auto r2 = find_periodicity(ab, s2, opt);
  const std::uint64_t horizon =
      std::max(r1.preperiod, r2.preperiod) + checked_lcm(r1.period, r2.period) + ab.alpha();
  if (horizon > opt.max_materialized_bits) {
    throw ResourceLimitError("is_extension: comparison horizon " + std::to_string(horizon) +
                             " exceeds the materialization budget");
  }
  return generate(a, s, horizon).bits == generate(ab, s2, horizon).bits;
}

bool check_translating_zeros(const MoveSet& a, std::uint64_t p) {
  const auto w = generate(a, Seed::none(a.alpha()), a.alpha() + p).bits;
  for (auto x : a.moves()) {
    for (std::uint64_t m = 0; m < x; ++m) {
      if (w[m]) continue;
      if (m + p < x) continue;  // lands in the all-ones past
      if (!w[m + p - x]) return false;
    }
  }
  return true;
}

bool check_pure_periodic(const MoveSet& a, const Seed& s, std::uint64_t p) {
  const std::uint64_t al = a.alpha();
  const auto w = generate(a, s, al + p).bits;
  return w.substr(0, al) == w.substr(p, al);
}

std::uint64_t period_bound(const MoveSet& a) {
  const std::uint64_t al = a.alpha();
  if (a.size() == 1) return 2 * al;
  const auto& m = a.moves();
  const std::uint64_t beta = std::min<std::uint64_t>(al, std::uint64_t{m[0]} + m[m.size() - 2]);
  const std::uint64_t e = al - a.size();
  if (e >= 63) return std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t pow = std::uint64_t{1} << e;
  if (beta + 1 > std::numeric_limits<std::uint64_t>::max() / pow) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return (beta + 1) * pow;
}

}  // namespace subgame
