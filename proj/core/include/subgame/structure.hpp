#pragma once

#include <cstdint>
#include <vector>

#include "subgame/engine.hpp"

namespace subgame {

struct Component {
  MoveSet moves;
  Seed seed;
};

// Splits (A, S) along g = gcd(A): component i plays A/g with S_i(m) = S(mg + i).
std::vector<Component> decompose(const MoveSet& a, const Seed& s);

// w(m*g + i) = parts[i][m]; output length n.
BitString interleave(const std::vector<BitString>& parts, std::uint64_t n);

// g * lcm(component periods) with g = number of components, valid when every component
// is purely periodic. Throws std::overflow_error past 64 bits.
std::uint64_t linearity_period(const std::vector<std::uint64_t>& component_periods);

// True iff adding b to A leaves w^{A,S} unchanged. The seed is left-padded with ones
// when b > alpha.
bool is_extension(const MoveSet& a, const Seed& s, std::uint32_t b, const EngineOptions& opt = {});

// Unseeded: for all x in A and m < x, w(m) = 0 implies w(m + p - x) = 1.
bool check_translating_zeros(const MoveSet& a, std::uint64_t p);

// v(alpha) == v(alpha + p).
bool check_pure_periodic(const MoveSet& a, const Seed& s, std::uint64_t p);

// (beta + 1) * 2^(alpha - |A|) with beta = min(alpha, a_1 + alpha'); 2*alpha for |A| = 1.
// Saturates at UINT64_MAX.
std::uint64_t period_bound(const MoveSet& a);

std::uint64_t checked_lcm(std::uint64_t x, std::uint64_t y);

}  // namespace subgame
