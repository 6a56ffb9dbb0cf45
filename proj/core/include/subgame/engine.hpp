#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "subgame/bits.hpp"
#include "subgame/move_set.hpp"

namespace subgame {

// v(n) = <w(n-alpha), ..., w(n-1)>; window[i] = w(n - alpha + i), same orientation as Seed.
struct StateVector {
  BitString window;
  friend bool operator==(const StateVector& a, const StateVector& b) { return a.window == b.window; }
};

// One application of F: returns v(n+1) and w(n).
std::pair<StateVector, bool> step(const StateVector& v, const MoveSet& a);

struct WinSequence {
  BitString bits;  // w(0..n-1)
  MoveSet moves;
  Seed seed;
};

WinSequence generate(const MoveSet& a, const Seed& s, std::uint64_t n);

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  // Budget for the state->index table, measured as 2 * walk * alpha bits.
  std::uint64_t memory_budget_bytes = std::uint64_t{256} << 20;
  // When the table would not fit: Brent's two-pointer search, or throw.
  bool allow_constant_memory_fallback = true;
  // Total applications of F before giving up.
  std::uint64_t max_steps = 20'000'000'000ULL;
  // Prefix and cycle are stored only when N + p fits.
  std::uint64_t max_materialized_bits = std::uint64_t{1} << 28;
};

struct OrbitInfo {
  std::uint64_t tail = 0;    // first index mu with v(mu) = v(mu + lambda)
  std::uint64_t cycle = 0;   // lambda
  std::uint64_t steps = 0;   // F applications spent
  bool used_table = false;
};

OrbitInfo find_orbit(const MoveSet& a, const Seed& s, const EngineOptions& opt = {});

struct PeriodicityReport {
  MoveSet moves;
  Seed seed;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
  BitString prefix;
  BitString cycle;
  bool materialized = true;

  bool bit(std::uint64_t n) const {
    return n < preperiod ? prefix[n] : cycle[(n - preperiod) % period];
  }
  // First n bits of prefix . cycle^inf; requires materialized.
  BitString expand(std::uint64_t n) const;
};

PeriodicityReport find_periodicity(const MoveSet& a, const Seed& s, const EngineOptions& opt = {});

// Smallest p <= max_steps with v(p) = v(0); empty when the seed state does not recur in
// time. A hit means the sequence is purely periodic with period p.
std::optional<std::uint64_t> return_time(const MoveSet& a, const Seed& s, std::uint64_t max_steps);

inline PeriodicityReport find_periodicity(const MoveSet& a) {
  return find_periodicity(a, Seed::none(a.alpha()));
}

namespace detail {

// Fast path for alpha <= 64: bit (x-1) of the state holds w(n-x).
struct NarrowDynamics {
  std::uint64_t taps = 0;
  std::uint64_t full = 0;
  std::uint32_t alpha = 0;

  explicit NarrowDynamics(const MoveSet& a);
  std::uint64_t encode(const Seed& s) const;
  Seed decode(std::uint64_t state) const;

  bool next_bit(std::uint64_t s) const { return (s & taps) != taps; }
  std::uint64_t advance(std::uint64_t s) const {
    return ((s << 1) | static_cast<std::uint64_t>(next_bit(s))) & full;
  }
};

}  // namespace detail

}  // namespace subgame
