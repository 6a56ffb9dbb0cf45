#include "subgame/harness.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "subgame/counting.hpp"
#include "subgame/enumeration.hpp"
#include "subgame/infinite.hpp"
#include "subgame/structure.hpp"

namespace subgame {

namespace {

// Static round-robin partition; out[i] depends only on items[i], so the result is the same
// for every thread count.
template <class R, class Item, class Fn>
std::vector<R> parallel_map(const std::vector<Item>& items, unsigned threads, Fn fn) {
  std::vector<R> out(items.size());
  const std::size_t n = items.size();
  const unsigned t_count =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, n)));
  if (t_count <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(items[i]);
    return out;
  }
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < t_count; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += t_count) out[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<MoveSet> triples(std::uint32_t min_a, std::uint32_t max_c) {
  std::vector<MoveSet> out;
  for (std::uint32_t c = 3; c <= max_c; ++c) {
    for (std::uint32_t a = std::max<std::uint32_t>(1, min_a); a < c; ++a) {
      for (std::uint32_t b = a + 1; b < c; ++b) out.push_back(MoveSet{a, b, c});
    }
  }
  return out;
}

void require_triple(const MoveSet& a, const std::string& claim) {
  if (a.size() != 3) throw std::invalid_argument(claim + " needs a 3-element move set");
}

CounterexampleRecord make_record(const std::string& claim, const PeriodicityReport& r,
                                 std::vector<std::int64_t> witness = {}) {
  return CounterexampleRecord{r.moves, r.seed, r.period, r.preperiod, claim, std::move(witness)};
}

std::optional<CounterexampleRecord> linear_violation(const PeriodicityReport& r) {
  const auto& m = r.moves.moves();
  if (m[0] + m[1] == m[2]) return std::nullopt;
  if (r.period < 2ULL * m[2]) return std::nullopt;
  return make_record(claims::kLinearBound, r);
}

std::optional<CounterexampleRecord> bound_violation(const PeriodicityReport& r) {
  const std::uint64_t bound = period_bound(r.moves);
  if (r.preperiod <= bound && r.period <= bound - r.preperiod) return std::nullopt;
  return make_record(claims::kPeriodBound, r, {static_cast<std::int64_t>(bound)});
}

std::optional<CounterexampleRecord> quadratic_violation(const PeriodicityReport& r) {
  const std::uint64_t c = r.moves.alpha();
  if (r.period < c * c) return std::nullopt;
  return make_record(claims::kQuadraticBound, r);
}

EngineOptions small_options() {
  EngineOptions opt;
  opt.max_materialized_bits = std::uint64_t{1} << 24;
  return opt;
}

}  // namespace

std::optional<CounterexampleRecord> check_claim(const std::string& claim, const MoveSet& a,
                                                const Seed& s) {
  const Seed none = Seed::none(a.alpha());
  if (claim == claims::kLinearBound) {
    require_triple(a, claim);
    return linear_violation(find_periodicity(a, none, small_options()));
  }
  if (claim == claims::kPeriodBound) return bound_violation(find_periodicity(a, s, small_options()));
  if (claim == claims::kQuadraticBound) {
    return quadratic_violation(find_periodicity(a, s, small_options()));
  }
  if (claim == claims::kAbcConditions) {
    require_triple(a, claim);
    const auto& m = a.moves();
    const auto r = find_periodicity(a, none, small_options());
    const bool truth = r.period == std::uint64_t{m[1]} + m[2] && r.preperiod == 0;
    const bool predicted = !abc_condition(abc_variables(m[0], m[1], m[2]), m[0]).empty();
    if (truth == predicted) return std::nullopt;
    return make_record(claim, r, {truth ? 1 : 0, predicted ? 1 : 0});
  }
  if (claim == claims::kAbcCorollary) {
    require_triple(a, claim);
    const auto& m = a.moves();
    const std::uint64_t bc = std::uint64_t{m[1]} + m[2];
    const auto r = find_periodicity(a, none, small_options());
    const BitString w = generate(a, none, bc).bits;
    std::vector<std::int64_t> zeros;
    for (std::uint64_t i = 1; i <= m[0]; ++i) {
      if (!w[bc - i]) zeros.push_back(static_cast<std::int64_t>(i));
    }
    const bool lhs = zeros.empty();
    const bool rhs = bc % r.period == 0 && r.preperiod == 0;
    if (lhs == rhs) return std::nullopt;
    return make_record(claim, r, std::move(zeros));
  }
  if (claim == claims::kExtensionConverse) {
    const ConverseCheck cc = extension_converse(a, s);
    if (!cc.all_extensions || cc.preperiod == 0) return std::nullopt;
    return CounterexampleRecord{a, s, cc.period, cc.preperiod, claim, {}};
  }
  throw std::invalid_argument("unknown claim '" + claim + "'");
}

bool CounterexampleRecord::replay() const {
  const auto again = check_claim(claim, moves, seed);
  return again && again->period == period && again->preperiod == preperiod &&
         again->witness == witness;
}

nlohmann::json record_to_json(const CounterexampleRecord& r) {
  return {{"claim", r.claim},         {"moves", r.moves.moves()},
          {"seed", r.seed.to_string()}, {"period", r.period},
          {"preperiod", r.preperiod},  {"witness", r.witness}};
}

CounterexampleRecord record_from_json(const nlohmann::json& j) {
  CounterexampleRecord r;
  r.claim = j.at("claim").get<std::string>();
  r.moves = MoveSet(j.at("moves").get<std::vector<std::uint32_t>>());
  r.seed = Seed{BitString::from_string(j.at("seed").get<std::string>())};
  r.period = j.at("period").get<std::uint64_t>();
  r.preperiod = j.at("preperiod").get<std::uint64_t>();
  r.witness = j.at("witness").get<std::vector<std::int64_t>>();
  return r;
}

std::string report_to_jsonl(const ScanReport& r) {
  std::ostringstream os;
  os << nlohmann::json{{"target", r.target},
                       {"params", r.params},
                       {"checked", r.checked},
                       {"counterexamples", r.counterexamples.size()},
                       {"summary", r.summary}}
            .dump()
     << '\n';
  for (const auto& c : r.counterexamples) os << record_to_json(c).dump() << '\n';
  return os.str();
}

std::string report_to_csv(const ScanReport& r) {
  std::ostringstream os;
  os << "claim,moves,seed,period,preperiod\n";
  for (const auto& c : r.counterexamples) {
    os << c.claim << ",\"" << c.moves.to_csv() << "\"," << c.seed.to_string() << ',' << c.period
       << ',' << c.preperiod << '\n';
  }
  return os.str();
}

ScanReport scan_linear_bound(std::uint32_t max_c, unsigned threads) {
  struct Item {
    std::vector<CounterexampleRecord> found;
    bool excluded = false;
    std::uint64_t period = 0;
  };
  const auto sets = triples(1, max_c);
  const auto items = parallel_map<Item>(sets, threads, [](const MoveSet& a) {
    Item it;
    const auto r = find_periodicity(a, Seed::none(a.alpha()), small_options());
    const auto& m = a.moves();
    it.excluded = m[0] + m[1] == m[2];
    it.period = r.period;
    if (auto v = linear_violation(r)) it.found.push_back(*v);
    if (auto v = bound_violation(r)) it.found.push_back(*v);
    return it;
  });
  ScanReport rep;
  rep.target = "linear-bound";
  rep.params = {{"max_c", max_c}};
  std::uint64_t excluded = 0;
  double best = 0;
  nlohmann::json best_set;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& it = items[i];
    rep.counterexamples.insert(rep.counterexamples.end(), it.found.begin(), it.found.end());
    if (!it.excluded) {
      ++rep.checked;
      continue;
    }
    ++excluded;
    const double c = sets[i].alpha();
    const double ratio = static_cast<double>(it.period) / (c * c);
    if (ratio > best) {
      best = ratio;
      best_set = {{"moves", sets[i].moves()}, {"period", it.period}};
    }
  }
  rep.summary = {{"excluded_triples", excluded},
                 {"bound_checked", sets.size()},
                 {"max_excluded_period_over_c2", best},
                 {"max_excluded", best_set}};
  return rep;
}

ScanReport scan_quadratic_bound(const ScanConfig& cfg) {
  struct Item {
    std::vector<CounterexampleRecord> found;
    std::uint64_t checked = 0;
    std::uint64_t max_period = 0;
  };
  std::vector<MoveSet> sets;
  for (const auto& a : triples(1, cfg.max_c)) {
    if (a.gcd() == 1) sets.push_back(a);
  }
  const auto items = parallel_map<Item>(sets, cfg.threads, [&cfg](const MoveSet& a) {
    Item it;
    const std::uint32_t al = a.alpha();
    const std::uint64_t c2 = std::uint64_t{al} * al;
    if (cfg.seeds == SeedPolicy::kAll) {
      it.checked = std::uint64_t{1} << al;
      const detail::NarrowDynamics d(a);
      for (const auto& [len, rep] : cycle_representatives(a)) {
        it.max_period = std::max(it.max_period, len);
        if (len >= c2) {
          if (auto v = check_claim(claims::kQuadraticBound, a, d.decode(rep))) it.found.push_back(*v);
        }
      }
      return it;
    }
    std::vector<Seed> seeds;
    if (cfg.seeds == SeedPolicy::kNone) {
      seeds.push_back(Seed::none(al));
    } else {
      std::seed_seq seq{cfg.rng_seed, std::uint64_t{a.moves()[0]}, std::uint64_t{a.moves()[1]},
                        std::uint64_t{al}};
      std::mt19937_64 rng(seq);
      const std::uint64_t k = std::min<std::uint64_t>(cfg.sample, std::uint64_t{1} << al);
      const std::uint64_t mask = (std::uint64_t{1} << al) - 1;
      for (std::uint64_t i = 0; i < k; ++i) seeds.push_back(Seed{BitString::from_uint(rng() & mask, al)});
    }
    for (const auto& s : seeds) {
      const auto r = find_periodicity(a, s, small_options());
      ++it.checked;
      it.max_period = std::max(it.max_period, r.period);
      if (auto v = quadratic_violation(r)) it.found.push_back(*v);
    }
    return it;
  });
  ScanReport rep;
  rep.target = "quadratic-bound";
  const char* policy[] = {"none", "all", "sampled"};
  rep.params = {{"max_c", cfg.max_c},
                {"seeds", policy[static_cast<int>(cfg.seeds)]},
                {"sample", cfg.sample},
                {"rng_seed", cfg.rng_seed}};
  double best = 0;
  nlohmann::json best_set;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    rep.checked += items[i].checked;
    rep.counterexamples.insert(rep.counterexamples.end(), items[i].found.begin(),
                               items[i].found.end());
    const double c = sets[i].alpha();
    const double ratio = static_cast<double>(items[i].max_period) / (c * c);
    if (ratio > best) {
      best = ratio;
      best_set = {{"moves", sets[i].moves()}, {"period", items[i].max_period}};
    }
  }
  rep.summary = {{"sets", sets.size()}, {"max_period_over_c2", best}, {"max", best_set}};
  return rep;
}

AbcVariables abc_variables(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  AbcVariables v;
  const std::int64_t A = a, B = b, C = c;
  v.q = B / A;
  v.r = B % A;
  v.qc = C / (A + B);
  v.rc = C % (A + B);
  v.qa = v.rc / (2 * A);
  v.ra = v.rc % (2 * A);
  v.qc2 = (C - A) / (A + B);
  v.rc2 = (C - A) % (A + B);
  v.qa2 = v.rc2 / (2 * A);
  v.ra2 = v.rc2 % (2 * A);
  return v;
}

std::string abc_condition(const AbcVariables& v, std::uint32_t a) {
  const std::int64_t A = a;
  if (v.q % 2 == 0 && v.rc2 > 0 && v.ra2 <= v.r && 2 * v.qa2 <= v.q &&
      (2 * v.qa2 != v.q || v.ra2 <= 2 * v.r - A)) {
    return "i";
  }
  if (v.q % 2 == 1 && v.r != 0 && v.r <= v.ra && v.ra <= A && (v.qa != 0 || v.ra < A)) return "ii";
  if (v.q % 2 == 1 && v.r == 0 && v.ra != A) return "iii";
  return "";
}

bool abc_boundary(const AbcVariables& v) {
  return v.q % 2 == 0 && 2 * v.qa2 == v.q && (v.r == 0 || v.ra2 == 0);
}

bool abc_truth(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const MoveSet m{a, b, c};
  const auto r = find_periodicity(m, Seed::none(c), small_options());
  return r.period == std::uint64_t{b} + c && r.preperiod == 0;
}

bool abc_window_test(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const MoveSet m{a, b, c};
  const std::uint64_t bc = std::uint64_t{b} + c;
  const BitString w = generate(m, Seed::none(c), bc).bits;
  for (std::uint64_t i = 1; i <= a; ++i) {
    if (!w[bc - i]) return false;
  }
  return true;
}

ScanReport scan_abc_per_bc(std::uint32_t max_c, unsigned threads) {
  struct Item {
    std::vector<CounterexampleRecord> found;
    bool truth = false;
    bool boundary = false;
    std::string condition;
  };
  const auto sets = triples(2, max_c);
  const auto items = parallel_map<Item>(sets, threads, [](const MoveSet& a) {
    Item it;
    const auto& m = a.moves();
    const auto v = abc_variables(m[0], m[1], m[2]);
    it.condition = abc_condition(v, m[0]);
    it.boundary = abc_boundary(v);
    it.truth = abc_truth(m[0], m[1], m[2]);
    const Seed none = Seed::none(a.alpha());
    if (auto r = check_claim(claims::kAbcConditions, a, none)) it.found.push_back(*r);
    if (auto r = check_claim(claims::kAbcCorollary, a, none)) it.found.push_back(*r);
    return it;
  });
  ScanReport rep;
  rep.target = "abc-per-bc";
  rep.params = {{"max_c", max_c}};
  rep.checked = sets.size();
  std::uint64_t positives = 0;
  std::map<std::string, std::uint64_t> by_condition;
  nlohmann::json boundary = nlohmann::json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& it = items[i];
    rep.counterexamples.insert(rep.counterexamples.end(), it.found.begin(), it.found.end());
    positives += it.truth;
    if (!it.condition.empty()) ++by_condition[it.condition];
    if (it.boundary) {
      boundary.push_back({{"moves", sets[i].moves()}, {"truth", it.truth},
                          {"condition", it.condition}});
    }
  }
  rep.summary = {{"per_equals_b_plus_c", positives},
                 {"by_condition", by_condition},
                 {"boundary_triples", boundary}};
  return rep;
}

ConverseCheck extension_converse(const MoveSet& a, const Seed& s) {
  const auto r = find_periodicity(a, s, small_options());
  ConverseCheck out{r.period, r.preperiod, true, {}};
  for (auto x : a.moves()) {
    const std::uint64_t b = r.period + x;
    if (b > UINT32_MAX || !is_extension(a, s, static_cast<std::uint32_t>(b), small_options())) {
      out.all_extensions = false;
      out.failing.push_back(x);
    }
  }
  return out;
}

ScanReport scan_extension_converse(std::uint32_t max_alpha, unsigned threads) {
  struct Item {
    std::vector<CounterexampleRecord> found;
    std::uint64_t checked = 0;
    std::uint64_t premise = 0;
  };
  std::vector<MoveSet> sets;
  for (std::uint32_t al = 1; al <= max_alpha; ++al) {
    sets.push_back(MoveSet{al});
    for (std::uint32_t x = 1; x < al; ++x) sets.push_back(MoveSet{x, al});
    for (std::uint32_t x = 1; x < al; ++x) {
      for (std::uint32_t y = x + 1; y < al; ++y) sets.push_back(MoveSet{x, y, al});
    }
  }
  const auto items = parallel_map<Item>(sets, threads, [](const MoveSet& a) {
    Item it;
    const std::uint32_t al = a.alpha();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << al); ++v) {
      const Seed s{BitString::from_uint(v, al)};
      const ConverseCheck cc = extension_converse(a, s);
      ++it.checked;
      if (!cc.all_extensions) continue;
      ++it.premise;
      if (cc.preperiod != 0) {
        it.found.push_back({a, s, cc.period, cc.preperiod, claims::kExtensionConverse, {}});
      }
    }
    return it;
  });
  ScanReport rep;
  rep.target = "extension-converse";
  rep.params = {{"max_alpha", max_alpha}};
  std::uint64_t premise = 0;
  for (const auto& it : items) {
    rep.checked += it.checked;
    premise += it.premise;
    rep.counterexamples.insert(rep.counterexamples.end(), it.found.begin(), it.found.end());
  }
  rep.summary = {{"sets", sets.size()}, {"premise_held", premise}};
  return rep;
}

std::vector<ExceptionalSet> find_superlinear_exceptions(std::uint32_t max_c, unsigned threads) {
  std::vector<MoveSet> sets;
  for (const auto& a : triples(1, max_c)) {
    const auto& m = a.moves();
    if (a.gcd() == 1 && m[2] % (m[0] + m[1]) != 0) sets.push_back(a);
  }
  const auto found =
      parallel_map<std::optional<ExceptionalSet>>(sets, threads, [](const MoveSet& a) {
        const auto reps = cycle_representatives(a);
        const auto& [len, state] = *reps.rbegin();
        std::optional<ExceptionalSet> out;
        if (len > 2ULL * a.alpha()) {
          out = ExceptionalSet{a, len, detail::NarrowDynamics(a).decode(state)};
        }
        return out;
      });
  std::vector<ExceptionalSet> out;
  for (const auto& f : found) {
    if (f) out.push_back(*f);
  }
  return out;
}

std::vector<MatchReport> run_oeis_checks(const OeisClient& client) {
  std::vector<std::int64_t> perrin_v, np, nt, zeros;
  for (std::uint32_t l = 0; l <= 40; ++l) perrin_v.push_back(static_cast<std::int64_t>(perrin(l)));
  for (std::uint32_t l = 1; l <= 40; ++l) {
    np.push_back(static_cast<std::int64_t>(n_prime(l)));
    nt.push_back(static_cast<std::int64_t>(n_total(l)));
  }
  for (auto m : losing_positions(InfiniteMoveSet::squares(), 1000)) {
    zeros.push_back(static_cast<std::int64_t>(m));
  }
  return {oeis_check("A001608", 0, perrin_v, client), oeis_check("A113788", 1, np, client),
          oeis_check("A127687", 1, nt, client), oeis_check("A030193", 1, zeros, client)};
}

}  // namespace subgame
