#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "subgame/bits.hpp"

namespace subgame {

// Length-l strings that are rotations of concatenations of 01 and 011, sorted.
std::vector<BitString> q_strings(std::uint32_t l);

// Q(0)=3, Q(1)=0, Q(2)=2, Q(l)=Q(l-2)+Q(l-3). Throws std::overflow_error past 64 bits.
std::uint64_t perrin(std::uint32_t l);

// Classes of primitive length-l Q-strings under rotation, and their total over l | L.
std::uint64_t n_prime(std::uint32_t l);
std::uint64_t n_total(std::uint32_t L);

// The gcd-refined counts for {a,b} games; requires g | L.
std::uint64_t n_prime_gcd(std::uint32_t L, std::uint32_t g);
std::uint64_t n_total_gcd(std::uint32_t L, std::uint32_t g);

// result(n) = x(a*n mod p), p = |x|; throws std::invalid_argument unless gcd(a, p) = 1.
BitString sigma(std::uint64_t a, const BitString& x);
// sigma with a replaced by its inverse mod p.
BitString sigma_inverse(std::uint64_t a, const BitString& x);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

// Periods reachable by some seed of {a, b}, a < b.
std::set<std::uint64_t> periods_pair(std::uint32_t a, std::uint32_t b);

struct MisCount {
  std::uint64_t labeled = 0;
  std::uint64_t unlabeled = 0;  // up to rotation only
};

// Maximal independent sets of the l-cycle by exhaustive search over 2^l subsets.
MisCount mis_cycle_count(std::uint32_t l);

// 1-based positions of the zeros of a Q-string: the matching independent vertex set.
std::vector<std::uint32_t> mis_vertices(const BitString& q);

}  // namespace subgame
