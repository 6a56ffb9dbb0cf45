#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subgame/bits.hpp"
#include "subgame/engine.hpp"

namespace subgame {

// A move set given by a membership predicate on the positive integers.
class InfiniteMoveSet {
 public:
  InfiniteMoveSet(std::string name, std::function<bool(std::uint64_t)> contains)
      : name_(std::move(name)), contains_(std::move(contains)) {}

  static InfiniteMoveSet squares();
  static InfiniteMoveSet cubes();
  static InfiniteMoveSet all_positive();

  const std::string& name() const { return name_; }
  bool contains(std::uint64_t x) const { return x > 0 && contains_(x); }
  std::vector<std::uint64_t> members_up_to(std::uint64_t n) const;

 private:
  std::string name_;
  std::function<bool(std::uint64_t)> contains_;
};

// w(0..n-1) with the unseeded convention w(m) = 1 for m < 0.
BitString generate_infinite(const InfiniteMoveSet& a, std::uint64_t n);

// Indices m < n with w(m) = 0.
std::vector<std::uint64_t> losing_positions(const InfiniteMoveSet& a, std::uint64_t n);

// Empirical only: no (N, p) with N + p <= max_span makes w(0..length-1) periodic from N on.
struct AperiodicityCertificate {
  std::uint64_t length = 0;
  std::uint64_t max_span = 0;
  bool holds = false;
  std::uint64_t witness_preperiod = 0;  // first offending pair when !holds
  std::uint64_t witness_period = 0;
};

AperiodicityCertificate certify_aperiodic(const BitString& w, std::uint64_t max_span);

}  // namespace subgame
