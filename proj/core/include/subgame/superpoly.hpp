#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "subgame/closed_forms.hpp"
#include "subgame/engine.hpp"

namespace subgame {

struct LemmaSeed {
  MoveSet moves;  // {1, b, b+1}
  Seed seed;      // (01^3)^n, left-padded with ones
  std::uint64_t period = 0;
  std::uint64_t preperiod = 0;
};

// Requires b odd and b > 4n+1 (any odd b >= 3 when n = 0); throws DomainError otherwise.
LemmaSeed lemma_seed(std::uint32_t n, std::uint32_t b);

// Periods 2(n+1)b+1 over every n the construction allows for this b.
std::vector<std::uint64_t> lemma_periods(std::uint32_t b);

// Rows 0..2n+1 of the extended grid, columns -2d..last_column(i).
class GridFilling {
 public:
  GridFilling(std::uint32_t n, std::uint32_t d);

  std::uint32_t n() const { return n_; }
  std::uint32_t d() const { return d_; }
  std::int64_t beta() const { return 4 * std::int64_t{n_} + 1; }
  std::int64_t b() const { return beta() + 2 * std::int64_t{d_}; }
  std::uint32_t rows() const { return 2 * n_ + 2; }
  std::int64_t first_column() const { return -2 * std::int64_t{d_}; }
  // beta for even rows, beta-1 for the last row, beta-2 for the other odd rows.
  std::int64_t last_column(std::uint32_t i) const;

  bool y(std::uint32_t i, std::int64_t j) const;
  // Position of cell (i, j) in the flattened string.
  std::size_t index(std::uint32_t i, std::int64_t j) const;
  const BitString& row(std::uint32_t i) const { return rows_[i]; }
  // Rows read in order; length 2(n+1)b + 1.
  const BitString& flattened() const { return flat_; }

 private:
  std::uint32_t n_;
  std::uint32_t d_;
  std::vector<BitString> rows_;
  std::vector<std::size_t> offsets_;
  BitString flat_;
};

struct GridReference {
  std::uint32_t i = 0;
  std::int64_t j = 0;
};

// Case 1..9 of the cell recurrence and the three cells it reads.
struct GridCase {
  int id = 0;
  GridReference refs[3];
};

GridCase grid_case(const GridFilling& g, std::uint32_t i, std::int64_t j);

struct GridViolation {
  std::uint32_t i = 0;
  std::int64_t j = 0;
  int case_id = 0;
  std::string what;
};

// Every cell: the case's references are the cyclic predecessors t-1, t-b, t-b-1 of its
// flattened position, and its value is 1 - min over them.
std::vector<GridViolation> validate_grid(const GridFilling& g);

class GridValidationError : public std::runtime_error {
 public:
  explicit GridValidationError(const GridViolation& v);
  GridViolation violation;
};

// Builds and validates; throws GridValidationError on the first bad cell.
GridFilling build_grid(std::uint32_t n, std::uint32_t d);

// True iff the engine, seeded with the first b+1 bits of the flattened grid, cycles through
// a rotation of it with period equal to its least subperiod.
bool grid_matches_engine(const GridFilling& g);

struct SuperFamilyInstance {
  std::uint32_t n = 0;
  std::uint32_t b = 0;  // 4n - 1
  MoveSet moves;        // {n, nb, nb + n}
  Seed seed;
  std::vector<std::uint64_t> component_periods;  // 2(i+1)b + 1
  std::uint64_t component_lcm = 0;               // lcm(component_periods), divides the period
  std::uint64_t divisor = 0;                     // n * component_lcm, a multiple of the period
};

SuperFamilyInstance super_family(std::uint32_t n);

// Component i of the instance is ({1, b, b+1}, (01^3)^i padded).
bool components_match(const SuperFamilyInstance& inst);

enum class FamilyVerdict { kExact, kDivisorConfirmed, kBudgetExceeded };

std::string to_string(FamilyVerdict v);

struct FamilyVerification {
  SuperFamilyInstance instance;
  FamilyVerdict verdict = FamilyVerdict::kBudgetExceeded;
  std::uint64_t period = 0;  // exact period when verdict is kExact
  std::vector<std::uint64_t> observed_component_periods;
  // Observed component periods are the predicted ones and hold over the window, so
  // component_lcm | per(A_n, S_(n)) | divisor.
  bool components_confirmed = false;
  std::uint64_t window = 0;
  std::uint64_t steps = 0;
};

// Exact period when the seed state recurs within budget steps; otherwise checks every
// component over a window of min(budget, 2^24) bits.
FamilyVerification verify_family(std::uint32_t n, std::uint64_t budget = 1'000'000'000);

struct LcmHeuristicRow {
  std::uint32_t b = 0;
  std::size_t period_count = 0;  // |P^{1,b,b+1}|
  std::uint64_t alpha = 0;       // max of period_count * {1, b, b+1}
  double log10_lcm = 0;          // log10 lcm(P)
  double log10_lemma_lcm = 0;    // log10 lcm of lemma_periods(b)
};

// Rows for b in [2, max_b]; max_b + 1 <= 30.
std::vector<LcmHeuristicRow> lcm_heuristic(std::uint32_t max_b);

}  // namespace subgame
