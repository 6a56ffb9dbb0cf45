#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "subgame/engine.hpp"

namespace subgame {

// Minimal subperiod of a cycle, rotated to its least rotation.
struct CanonicalCycle {
  BitString bits;
  friend bool operator==(const CanonicalCycle& a, const CanonicalCycle& b) { return a.bits == b.bits; }
  friend bool operator<(const CanonicalCycle& a, const CanonicalCycle& b) { return a.bits < b.bits; }
};

CanonicalCycle canonicalize(const BitString& cycle);
// Smallest d dividing |x| with x = (x[0..d))^(|x|/d).
std::size_t min_subperiod(const BitString& x);
// Booth's least rotation index.
std::size_t least_rotation(const BitString& x);

struct AtlasOptions {
  std::uint32_t max_alpha = 24;
};

// Every seed of A with its exact (preperiod, period) and cycle class.
class SeedAtlas {
 public:
  struct CycleInfo {
    std::uint64_t period = 0;
    std::uint64_t representative = 0;  // a state on the cycle
    CanonicalCycle canonical;
    std::uint64_t seeds = 0;           // basin size
  };

  const MoveSet& moves() const { return moves_; }
  std::uint64_t seed_count() const { return std::uint64_t{1} << moves_.alpha(); }

  // Seed values read most significant bit first: bit 0 of the string is the top bit.
  std::uint64_t preperiod(std::uint64_t seed) const;
  std::uint64_t period(std::uint64_t seed) const { return cycles_[cycle_of_[seed]].period; }
  const CanonicalCycle& canonical(std::uint64_t seed) const { return cycles_[cycle_of_[seed]].canonical; }
  PeriodicityReport report(std::uint64_t seed) const;

  const std::vector<CycleInfo>& cycles() const { return cycles_; }
  std::set<std::uint64_t> periods() const;                   // P^A
  std::set<CanonicalCycle> classes() const;                   // W^A / ~
  std::map<std::uint64_t, std::uint64_t> class_counts() const;  // length -> #classes
  // |W^A|: distinct sequences, i.e. the size of the image of F^alpha.
  std::uint64_t sequence_count() const;
  // Sequences satisfying the recurrence on all of Z: one per state on a cycle.
  std::uint64_t recurrent_sequence_count() const;
  std::uint64_t max_preperiod() const;

 private:
  friend SeedAtlas enumerate_seeds(const MoveSet& a, const AtlasOptions& opt);

  MoveSet moves_;
  std::vector<std::uint32_t> dist_;      // steps until the state orbit enters its cycle
  std::vector<std::uint32_t> cycle_of_;  // index into cycles_
  std::vector<CycleInfo> cycles_;
};

// Throws ResourceLimitError when alpha exceeds opt.max_alpha.
SeedAtlas enumerate_seeds(const MoveSet& a, const AtlasOptions& opt = {});

// Class sets per length.
std::map<std::uint64_t, std::set<CanonicalCycle>> distinct_periodicities(const SeedAtlas& atlas);

// "seed,preperiod,period,cycle" rows ordered by seed value.
std::string atlas_to_csv(const SeedAtlas& atlas);

// P^A without per-seed bookkeeping. Walks start only from windows that already satisfy
// the recurrence internally, since every cycle lies among them. Up to alpha 30 the walk
// marks states in 2^alpha-bit maps; wider sets (alpha <= 64) index the sorted consistent
// windows instead and throw ResourceLimitError past 2^25 of them.
std::set<std::uint64_t> cycle_lengths(const MoveSet& a);
// Cycle length -> first state found on a cycle of that length.
std::map<std::uint64_t, std::uint64_t> cycle_representatives(const MoveSet& a);

// Windows ⟨w(n-alpha..n-1)⟩ (as narrow states) consistent with the recurrence.
std::vector<std::uint64_t> consistent_windows(const MoveSet& a);

}  // namespace subgame
