#include "subgame/superpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "subgame/enumeration.hpp"
#include "subgame/structure.hpp"

namespace subgame {

namespace {

BitString bits(const std::string& s) { return BitString::from_string(s); }

std::string rep(const std::string& s, std::uint32_t k) {
  std::string out;
  for (std::uint32_t i = 0; i < k; ++i) out += s;
  return out;
}

}  // namespace

LemmaSeed lemma_seed(std::uint32_t n, std::uint32_t b) {
  if (b % 2 == 0) throw DomainError("lemma_seed: b must be odd");
  if (n == 0 ? b < 3 : b <= 4 * n + 1) {
    throw DomainError("lemma_seed: need b > 4n+1, got n=" + std::to_string(n) +
                      " b=" + std::to_string(b));
  }
  const MoveSet a{1, b, b + 1};
  return LemmaSeed{a, normalize_seed(bits(rep("0111", n)), a), 2ULL * (n + 1) * b + 1, 0};
}

std::vector<std::uint64_t> lemma_periods(std::uint32_t b) {
  std::vector<std::uint64_t> out;
  if (b % 2 == 0 || b < 3) return out;
  for (std::uint32_t n = 0; n == 0 || 4 * n + 1 < b; ++n) out.push_back(2ULL * (n + 1) * b + 1);
  return out;
}

GridFilling::GridFilling(std::uint32_t n, std::uint32_t d) : n_(n), d_(d) {
  if (n == 0) throw DomainError("build_grid: n must be at least 1");
  for (std::uint32_t i = 0; i < rows(); ++i) {
    const std::uint32_t k = i / 2;
    std::string r;
    if (i % 2 == 0) {
      r = rep("11", d) + rep("1110", k) + "11" + rep("0111", n - k);
    } else if (i == 2 * n + 1) {
      r = rep("01", d) + "0" + rep("1110", n);
    } else {
      r = rep("01", d) + "0" + rep("1110", k) + "11" + rep("0111", n - k - 1) + "0";
    }
    offsets_.push_back(flat_.size());
    rows_.push_back(bits(r));
    flat_.append(rows_.back());
  }
}

std::int64_t GridFilling::last_column(std::uint32_t i) const {
  if (i % 2 == 0) return beta();
  return i == 2 * n_ + 1 ? beta() - 1 : beta() - 2;
}

bool GridFilling::y(std::uint32_t i, std::int64_t j) const {
  return rows_.at(i).at(static_cast<std::size_t>(j - first_column()));
}

std::size_t GridFilling::index(std::uint32_t i, std::int64_t j) const {
  if (i >= rows() || j < first_column() || j > last_column(i)) {
    throw std::out_of_range("grid cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") does not exist");
  }
  return offsets_[i] + static_cast<std::size_t>(j - first_column());
}

GridCase grid_case(const GridFilling& g, std::uint32_t i, std::int64_t j) {
  const std::int64_t be = g.beta();
  const std::int64_t lo = g.first_column();
  const std::uint32_t last = 2 * g.n() + 1;
  const auto ref = [](std::uint32_t r, std::int64_t c) { return GridReference{r, c}; };
  if (i % 2 == 1) {
    if (j > lo) return {1, {ref(i, j - 1), ref(i - 1, j), ref(i - 1, j + 1)}};
    return {3, {ref(i - 1, be), ref(i - 1, lo), ref(i - 1, lo + 1)}};
  }
  if (i == 0) {
    if (j > lo && j < be) return {4, {ref(0, j - 1), ref(last, j), ref(last, j - 1)}};
    if (j == lo) return {5, {ref(last, be - 1), ref(2 * g.n(), be), ref(last, lo)}};
    return {6, {ref(0, be - 1), ref(0, lo), ref(last, be - 1)}};
  }
  if (j > lo + 1 && j < be) return {2, {ref(i, j - 1), ref(i - 1, j - 2), ref(i - 1, j - 1)}};
  if (j == be) return {7, {ref(i, be - 1), ref(i, lo), ref(i - 1, be - 2)}};
  if (j == lo + 1) return {8, {ref(i, lo), ref(i - 1, lo), ref(i - 2, be)}};
  return {9, {ref(i - 1, be - 2), ref(i - 2, be), ref(i - 2, be - 1)}};
}

std::vector<GridViolation> validate_grid(const GridFilling& g) {
  std::vector<GridViolation> out;
  const BitString& y = g.flattened();
  const std::size_t len = y.size();
  const std::size_t b = static_cast<std::size_t>(g.b());
  if (len != 2 * (g.n() + 1) * b + 1) {
    out.push_back({0, 0, 0, "flattened length " + std::to_string(len)});
    return out;
  }
  for (std::uint32_t i = 0; i < g.rows(); ++i) {
    for (std::int64_t j = g.first_column(); j <= g.last_column(i); ++j) {
      const std::size_t t = g.index(i, j);
      const GridCase c = grid_case(g, i, j);
      std::vector<std::size_t> want{(t + len - 1) % len, (t + len - b) % len,
                                    (t + len - b - 1) % len};
      std::vector<std::size_t> got;
      try {
        for (const auto& r : c.refs) got.push_back(g.index(r.i, r.j));
      } catch (const std::out_of_range& e) {
        out.push_back({i, j, c.id, e.what()});
        continue;
      }
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (want != got) {
        out.push_back({i, j, c.id, "references are not the cyclic predecessors"});
        continue;
      }
      const bool expect = !(y[want[0]] && y[want[1]] && y[want[2]]);
      if (y[t] != expect) out.push_back({i, j, c.id, "value breaks the recurrence"});
    }
  }
  return out;
}

GridValidationError::GridValidationError(const GridViolation& v)
    : std::runtime_error("grid cell (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                         ") case " + std::to_string(v.case_id) + ": " + v.what),
      violation(v) {}

GridFilling build_grid(std::uint32_t n, std::uint32_t d) {
  GridFilling g(n, d);
  const auto bad = validate_grid(g);
  if (!bad.empty()) throw GridValidationError(bad.front());
  return g;
}

bool grid_matches_engine(const GridFilling& g) {
  const std::uint32_t b = static_cast<std::uint32_t>(g.b());
  const MoveSet a{1, b, b + 1};
  const BitString& y = g.flattened();
  const auto r = find_periodicity(a, Seed{y.substr(0, b + 1)});
  return r.preperiod == 0 && r.period == min_subperiod(y) &&
         canonicalize(r.cycle) == canonicalize(y);
}

SuperFamilyInstance super_family(std::uint32_t n) {
  if (n == 0) throw DomainError("super_family: n must be at least 1");
  SuperFamilyInstance inst;
  inst.n = n;
  inst.b = 4 * n - 1;
  inst.moves = MoveSet{n, n * inst.b, n * inst.b + n};
  BitString raw;
  for (std::uint32_t j = 1; j < n; ++j) {
    raw.append(BitString(j, false));
    raw.append(BitString(inst.b - j, true));
  }
  inst.seed = normalize_seed(raw, inst.moves);
  std::uint64_t l = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    inst.component_periods.push_back(2ULL * (i + 1) * inst.b + 1);
    l = checked_lcm(l, inst.component_periods.back());
  }
  inst.component_lcm = l;
  inst.divisor = l * n;
  return inst;
}

bool components_match(const SuperFamilyInstance& inst) {
  const auto parts = decompose(inst.moves, inst.seed);
  if (parts.size() != inst.n) return false;
  for (std::uint32_t i = 0; i < inst.n; ++i) {
    const MoveSet base{1, inst.b, inst.b + 1};
    if (!(parts[i].moves == base)) return false;
    if (!(parts[i].seed == normalize_seed(bits(rep("0111", i)), base))) return false;
  }
  return true;
}

std::string to_string(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::kExact:
      return "exact";
    case FamilyVerdict::kDivisorConfirmed:
      return "divisor-confirmed";
    case FamilyVerdict::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

FamilyVerification verify_family(std::uint32_t n, std::uint64_t budget) {
  FamilyVerification out;
  out.instance = super_family(n);
  const auto& inst = out.instance;

  bool predicted = true;
  for (const auto& c : decompose(inst.moves, inst.seed)) {
    const auto r = find_periodicity(c.moves, c.seed);
    out.observed_component_periods.push_back(r.period);
    predicted = predicted && r.preperiod == 0;
  }
  predicted = predicted && out.observed_component_periods == inst.component_periods;

  if (const auto p = return_time(inst.moves, inst.seed, budget)) {
    out.verdict = FamilyVerdict::kExact;
    out.period = *p;
    out.steps = *p;
  } else {
    out.steps = budget;
  }

  // Window check: w(m n + i) = w((m + p_i) n + i) wherever both indices fit.
  out.window = std::min<std::uint64_t>(budget, std::uint64_t{1} << 24);
  const BitString w = generate(inst.moves, inst.seed, out.window).bits;
  bool holds = predicted;
  for (std::uint32_t i = 0; holds && i < n; ++i) {
    const std::uint64_t shift = inst.component_periods[i] * n;
    for (std::uint64_t t = i; t + shift < w.size(); t += n) {
      if (w[t] != w[t + shift]) {
        holds = false;
        break;
      }
    }
  }
  out.components_confirmed = holds;
  if (out.verdict != FamilyVerdict::kExact && holds) out.verdict = FamilyVerdict::kDivisorConfirmed;
  return out;
}

std::vector<LcmHeuristicRow> lcm_heuristic(std::uint32_t max_b) {
  std::vector<LcmHeuristicRow> out;
  const auto log_lcm = [](const std::vector<std::uint64_t>& xs) {
    std::map<std::uint64_t, int> top;  // prime -> largest exponent
    for (auto x : xs) {
      for (std::uint64_t p = 2; p * p <= x; ++p) {
        int e = 0;
        while (x % p == 0) {
          x /= p;
          ++e;
        }
        if (e) top[p] = std::max(top[p], e);
      }
      if (x > 1) top[x] = std::max(top[x], 1);
    }
    double s = 0;
    for (const auto& [p, e] : top) s += e * std::log10(static_cast<double>(p));
    return s;
  };
  for (std::uint32_t b = 2; b <= max_b; ++b) {
    const auto ps = cycle_lengths(MoveSet{1, b, b + 1});
    LcmHeuristicRow r;
    r.b = b;
    r.period_count = ps.size();
    r.alpha = static_cast<std::uint64_t>(ps.size()) * (b + 1);
    r.log10_lcm = log_lcm({ps.begin(), ps.end()});
    r.log10_lemma_lcm = log_lcm(lemma_periods(b));
    out.push_back(r);
  }
  return out;
}

}  // namespace subgame
