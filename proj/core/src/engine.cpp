#include "subgame/engine.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "subgame/structure.hpp"

namespace subgame {

namespace detail {

NarrowDynamics::NarrowDynamics(const MoveSet& a) : alpha(a.alpha()) {
  if (alpha > 64) throw std::invalid_argument("NarrowDynamics: alpha > 64");
  for (auto x : a.moves()) taps |= std::uint64_t{1} << (x - 1);
  full = alpha == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << alpha) - 1;
}

std::uint64_t NarrowDynamics::encode(const Seed& s) const { return s.bits.to_uint(); }

Seed NarrowDynamics::decode(std::uint64_t state) const { return Seed{BitString::from_uint(state, alpha)}; }

namespace {

// Same layout as NarrowDynamics spread over several words.
struct WideDynamics {
  using State = std::vector<std::uint64_t>;

  std::vector<std::uint64_t> taps;
  std::uint64_t top_mask = 0;
  std::uint32_t alpha = 0;

  explicit WideDynamics(const MoveSet& a) : alpha(a.alpha()) {
    const std::size_t nw = (alpha + 63) / 64;
    taps.assign(nw, 0);
    for (auto x : a.moves()) taps[(x - 1) >> 6] |= std::uint64_t{1} << ((x - 1) & 63);
    top_mask = (alpha & 63) ? (std::uint64_t{1} << (alpha & 63)) - 1 : ~std::uint64_t{0};
  }

  State encode(const Seed& s) const {
    State st(taps.size(), 0);
    for (std::uint32_t i = 0; i < alpha; ++i) {
      if (s.bits[i]) {
        const std::uint32_t k = alpha - 1 - i;
        st[k >> 6] |= std::uint64_t{1} << (k & 63);
      }
    }
    return st;
  }

  bool next_bit(const State& s) const {
    for (std::size_t w = 0; w < taps.size(); ++w) {
      if ((s[w] & taps[w]) != taps[w]) return true;
    }
    return false;
  }

  bool advance(State& s) const {
    const bool bit = next_bit(s);
    std::uint64_t carry = bit;
    for (auto& w : s) {
      const std::uint64_t out = w >> 63;
      w = (w << 1) | carry;
      carry = out;
    }
    s.back() &= top_mask;
    return bit;
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : v) h = (h ^ w) * 0x100000001b3ULL ^ (w >> 29);
    return static_cast<std::size_t>(h);
  }
};

// Uniform interface: State, advance(State&) -> bit.
struct NarrowAdapter {
  using State = std::uint64_t;
  NarrowDynamics d;
  bool advance(State& s) const {
    const bool bit = d.next_bit(s);
    s = ((s << 1) | static_cast<std::uint64_t>(bit)) & d.full;
    return bit;
  }
};

class StepCounter {
 public:
  explicit StepCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++steps_ > limit_) {
      throw ResourceLimitError("step budget of " + std::to_string(limit_) + " exhausted");
    }
  }
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
};

template <class Dyn, class Hash>
bool orbit_table(const Dyn& d, typename Dyn::State s, std::uint64_t max_entries, StepCounter& ctr,
                 OrbitInfo& out) {
  std::unordered_map<typename Dyn::State, std::uint64_t, Hash> seen;
  for (std::uint64_t n = 0;; ++n) {
    auto [it, fresh] = seen.emplace(s, n);
    if (!fresh) {
      out.tail = it->second;
      out.cycle = n - it->second;
      out.used_table = true;
      return true;
    }
    if (seen.size() > max_entries) return false;
    d.advance(s);
    ctr.tick();
  }
}

template <class Dyn>
void orbit_brent(const Dyn& d, const typename Dyn::State& s0, StepCounter& ctr, OrbitInfo& out) {
  std::uint64_t power = 1;
  std::uint64_t lam = 1;
  auto tortoise = s0;
  auto hare = s0;
  d.advance(hare);
  ctr.tick();
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power <<= 1;
      lam = 0;
    }
    d.advance(hare);
    ctr.tick();
    ++lam;
  }
  tortoise = s0;
  hare = s0;
  for (std::uint64_t i = 0; i < lam; ++i) {
    d.advance(hare);
    ctr.tick();
  }
  std::uint64_t mu = 0;
  while (tortoise != hare) {
    d.advance(tortoise);
    d.advance(hare);
    ctr.tick();
    ctr.tick();
    ++mu;
  }
  out.tail = mu;
  out.cycle = lam;
  out.used_table = false;
}

template <class Dyn, class Hash>
OrbitInfo orbit(const Dyn& d, const typename Dyn::State& s0, const MoveSet& a,
                const EngineOptions& opt) {
  StepCounter ctr(opt.max_steps);
  OrbitInfo out;
  const std::uint64_t alpha = a.alpha();
  std::uint64_t walk = period_bound(a);
  if (alpha < 64) walk = std::min<std::uint64_t>(walk, std::uint64_t{1} << alpha);
  // 2 * walk * alpha bits, the table's nominal footprint.
  const std::uint64_t per_entry_bits = 2 * alpha;
  const std::uint64_t max_entries = opt.memory_budget_bytes * 8 / per_entry_bits;
  const bool fits = walk <= max_entries;
  if (!fits && !opt.allow_constant_memory_fallback) {
    throw ResourceLimitError("state table for " + a.to_string() + " needs up to " +
                             std::to_string(walk) + " entries; budget allows " +
                             std::to_string(max_entries));
  }
  if (fits && orbit_table<Dyn, Hash>(d, s0, max_entries, ctr, out)) {
    out.steps = ctr.steps();
    return out;
  }
  if (!opt.allow_constant_memory_fallback) {
    throw ResourceLimitError("state table overflowed the memory budget for " + a.to_string());
  }
  StepCounter ctr2(opt.max_steps > ctr.steps() ? opt.max_steps - ctr.steps() : 0);
  orbit_brent(d, s0, ctr2, out);
  out.steps = ctr.steps() + ctr2.steps();
  return out;
}

template <class Dyn>
BitString run(const Dyn& d, typename Dyn::State s, std::uint64_t n) {
  BitString out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(d.advance(s));
  return out;
}

template <class Dyn>
std::optional<std::uint64_t> first_return(const Dyn& d, const typename Dyn::State& s0,
                                          std::uint64_t max_steps) {
  auto s = s0;
  for (std::uint64_t n = 1; n <= max_steps; ++n) {
    d.advance(s);
    if (s == s0) return n;
  }
  return std::nullopt;
}

void check_seed(const MoveSet& a, const Seed& s) {
  if (s.size() != a.alpha()) {
    throw std::invalid_argument("seed length " + std::to_string(s.size()) + " != alpha " +
                                std::to_string(a.alpha()));
  }
}

}  // namespace
}  // namespace detail

std::pair<StateVector, bool> step(const StateVector& v, const MoveSet& a) {
  const std::size_t al = a.alpha();
  if (v.window.size() != al) throw std::invalid_argument("step: window width != alpha");
  bool any_zero = false;
  for (auto x : a.moves()) {
    if (!v.window[al - x]) {
      any_zero = true;
      break;
    }
  }
  StateVector next{v.window.substr(1, al - 1)};
  next.window.push_back(any_zero);
  return {std::move(next), any_zero};
}

WinSequence generate(const MoveSet& a, const Seed& s, std::uint64_t n) {
  detail::check_seed(a, s);
  WinSequence out{{}, a, s};
  if (a.alpha() <= 64) {
    detail::NarrowAdapter d{detail::NarrowDynamics(a)};
    out.bits = detail::run(d, d.d.encode(s), n);
  } else {
    detail::WideDynamics d(a);
    out.bits = detail::run(d, d.encode(s), n);
  }
  return out;
}

OrbitInfo find_orbit(const MoveSet& a, const Seed& s, const EngineOptions& opt) {
  detail::check_seed(a, s);
  if (a.alpha() <= 64) {
    detail::NarrowAdapter d{detail::NarrowDynamics(a)};
    return detail::orbit<detail::NarrowAdapter, std::hash<std::uint64_t>>(d, d.d.encode(s), a, opt);
  }
  detail::WideDynamics d(a);
  return detail::orbit<detail::WideDynamics, detail::VecHash>(d, d.encode(s), a, opt);
}

std::optional<std::uint64_t> return_time(const MoveSet& a, const Seed& s, std::uint64_t max_steps) {
  detail::check_seed(a, s);
  if (a.alpha() <= 64) {
    detail::NarrowAdapter d{detail::NarrowDynamics(a)};
    return detail::first_return(d, d.d.encode(s), max_steps);
  }
  detail::WideDynamics d(a);
  return detail::first_return(d, d.encode(s), max_steps);
}

BitString PeriodicityReport::expand(std::uint64_t n) const {
  if (!materialized) throw std::logic_error("report was not materialized");
  BitString out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(bit(i));
  return out;
}

PeriodicityReport find_periodicity(const MoveSet& a, const Seed& s, const EngineOptions& opt) {
  const OrbitInfo o = find_orbit(a, s, opt);
  PeriodicityReport r{a, s, 0, o.cycle, {}, {}, false};
  const std::uint64_t mu = o.tail;
  const std::uint64_t lam = o.cycle;
  const std::uint64_t al = a.alpha();
  // v(mu) = v(mu+lam) fixes w(n) = w(n+lam) for n >= mu - alpha. Everything below that
  // is settled by one comparison per index, scanning down from mu - 1.
  if (mu + lam <= opt.max_materialized_bits + al) {
    const BitString w = generate(a, s, mu + lam).bits;
    std::uint64_t n = mu;
    while (n > 0 && w[n - 1] == w[n - 1 + lam]) --n;
    r.preperiod = n;
    if (n + lam <= opt.max_materialized_bits) {
      r.prefix = w.substr(0, n);
      r.cycle = w.substr(n, lam);
      r.materialized = true;
    }
  } else {
    r.preperiod = mu > al ? mu - al : 0;
  }
  return r;
}

}  // namespace subgame
