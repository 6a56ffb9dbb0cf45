// Runs the eleven acceptance criteria and prints one PASS/FAIL line for each.
//
// Usage: subgame_acceptance [--known-failures=ID,ID...]
// Exit status is 0 when the failing criteria are exactly the listed ones (none by default).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subgame/closed_forms.hpp"
#include "subgame/counting.hpp"
#include "subgame/engine.hpp"
#include "subgame/enumeration.hpp"
#include "subgame/harness.hpp"
#include "subgame/pattern.hpp"
#include "subgame/superpoly.hpp"
#include "suites.hpp"

using namespace subgame;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BitString bits(const std::string& s) { return BitString::from_string(s); }

void c1(Outcome& o) {
  const auto t0 = Clock::now();
  const auto r = find_periodicity(MoveSet{2, 4, 7});
  const double ms = seconds_since(t0) * 1e3;
  o.require(r.preperiod == 4 && r.period == 3, "got N=" + std::to_string(r.preperiod) + " p=" + std::to_string(r.period));
  o.require(r.expand(10).to_string() == "0011110110", "prefix " + r.expand(10).to_string());
  o.require(ms < 1.0, "took " + std::to_string(ms) + " ms");
  if (o.pass) o.detail << "N=4 p=3 prefix 0011110110 in " << ms << " ms";
}

void c2(Outcome& o) {
  const auto t0 = Clock::now();
  std::uint64_t seeds = 0, bad_period = 0, with_preperiod = 0;
  std::string first_preperiod;
  for (std::uint32_t b = 2; b <= 12; ++b) {
    for (std::uint32_t a = 1; a < b; ++a) {
      const auto atlas = enumerate_seeds(MoveSet{a, b});
      for (std::uint64_t s = 0; s < atlas.seed_count(); ++s) {
        ++seeds;
        if ((a + b) % atlas.period(s) != 0) ++bad_period;
        if (atlas.preperiod(s) != 0 && with_preperiod++ == 0) {
          first_preperiod = MoveSet{a, b}.to_string() + " seed " + BitString::from_uint(s, b).to_string() +
                            " N=" + std::to_string(atlas.preperiod(s));
        }
      }
    }
  }
  o.require(bad_period == 0, std::to_string(bad_period) + " seeds with p not dividing a+b");
  o.require(with_preperiod == 0, std::to_string(with_preperiod) + "/" + std::to_string(seeds) +
                                     " seeds have N>0 (first: " + first_preperiod + ")");
  std::string literal_mismatch;
  bool recurrent_ok = true;
  for (std::uint32_t b = 2; b <= 13; ++b) {
    const auto atlas = enumerate_seeds(MoveSet{1, b});
    if (atlas.sequence_count() != perrin(b + 1) && literal_mismatch.empty()) {
      literal_mismatch = "|W^{1," + std::to_string(b) + "}|=" + std::to_string(atlas.sequence_count()) +
                         " vs Q=" + std::to_string(perrin(b + 1));
    }
    recurrent_ok = recurrent_ok && atlas.recurrent_sequence_count() == perrin(b + 1);
  }
  o.require(literal_mismatch.empty(), literal_mismatch);
  o.require(perrin(14) == 51 && perrin(20) == 277, "Perrin values");
  const double s = seconds_since(t0);
  o.require(s < 30, "took " + std::to_string(s) + " s");
  o.detail << (o.pass ? "" : " | ") << "period | a+b for all " << seeds << " seeds; recurrent sequences = Q(1+b): "
           << (recurrent_ok ? "yes" : "no") << "; " << s << " s";
}

void c3(Outcome& o) {
  const auto y = sigma(5, bits("01011011011011"));
  o.require(y == expand(parse_pattern("(0^2 1^3)^2 0 1^3"), 14), "sigma gives " + y.to_string());
  std::set<CanonicalCycle> want;
  for (const char* p : {"(0^2 1^3)^2 0 1^3", "1^2 0^3 1^3 (01)^3", "0^3 1^3 0^3 1^5", "0^3 1^4", "01"}) {
    const auto e = parse_pattern(p);
    want.insert(canonicalize(expand(e, e.finite_length())));
  }
  const auto got = enumerate_seeds(MoveSet{3, 11}).classes();
  o.require(got == want, "{3,11} has " + std::to_string(got.size()) + " classes, list differs");
  if (o.pass) o.detail << "sigma example exact; {3,11} classes match the 5 listed";
}

// Oracle and engine agree on case data, pattern, period and preperiod.
bool same(const OracleResult& r, std::string& why) {
  const auto e = find_periodicity(r.moves);
  if (e.period != r.period || e.preperiod != r.preperiod) {
    why = r.moves.to_string() + " oracle (" + std::to_string(r.preperiod) + "," + std::to_string(r.period) +
          ") engine (" + std::to_string(e.preperiod) + "," + std::to_string(e.period) + ")";
    return false;
  }
  if (r.pattern) {
    const std::uint64_t h = e.preperiod + 3 * e.period + r.moves.alpha();
    if (expand(*r.pattern, h) != e.expand(h)) {
      why = r.moves.to_string() + " pattern " + render(*r.pattern);
      return false;
    }
  }
  return true;
}

void c4(Outcome& o) {
  const auto t0 = Clock::now();
  std::uint64_t n = 0;
  std::set<std::string> cases;
  for (std::uint32_t c = 3; c <= 40; ++c) {
    for (std::uint32_t b = 2; b < c; ++b) {
      const auto r = cf_1bc(b, c);
      std::string why;
      ++n;
      cases.insert(r.tag);
      if (!same(r, why)) o.require(false, why);
    }
  }
  const auto ex = cf_1bc(6, 21);
  o.require(ex.period == 22 && ex.preperiod == 51, "{1,6,21} oracle");
  const auto ee = find_periodicity(MoveSet{1, 6, 21});
  o.require(ee.period == 22 && ee.preperiod == 51, "{1,6,21} engine");
  o.require(cases.size() == 9, "only " + std::to_string(cases.size()) + " cases seen");
  const double s = seconds_since(t0);
  o.require(s < 60, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail << n << " triples, all 9 cases, {1,6,21} -> (22,51); " << s << " s";
}

void c5(Outcome& o) {
  std::uint64_t n = 0;
  for (std::uint32_t b = 2; b <= 40; ++b) {
    for (std::uint32_t a = 1; a < b; ++a) {
      const auto r = cf_ab_apb(a, b);
      const auto e = find_periodicity(r.moves);
      ++n;
      if (e.period != r.period) {
        o.require(false, r.moves.to_string() + " oracle " + std::to_string(r.period) + " engine " +
                             std::to_string(e.period));
      }
    }
  }
  o.require(find_periodicity(MoveSet{13, 29, 42}).period == 793, "{13,29,42}");
  for (std::uint32_t a = 1; a <= 20; ++a) {
    o.require(cf_ab_apb(a, 2 * a + 1).period == 4ULL * a * a + 3 * a, "4a^2+3a at a=" + std::to_string(a));
  }
  if (o.pass) o.detail << n << " pairs, {13,29,42} -> 793, 4a^2+3a for a <= 20";
}

void c6(Outcome& o) {
  std::uint64_t seeds = 0, grids = 0;
  for (std::uint32_t b = 3; b <= 31; b += 2) {
    for (std::uint32_t n = 0; n == 0 || 4 * n + 1 < b; ++n) {
      const auto l = lemma_seed(n, b);
      const auto r = find_periodicity(l.moves, l.seed);
      ++seeds;
      if (r.period != 2ULL * (n + 1) * b + 1 || r.preperiod != 0) {
        o.require(false, "b=" + std::to_string(b) + " n=" + std::to_string(n) + " p=" + std::to_string(r.period));
      }
    }
  }
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (std::uint32_t d = 0; d <= 4; ++d) {
      const GridFilling g(n, d);
      const auto bad = validate_grid(g);
      ++grids;
      o.require(bad.empty(), "grid n=" + std::to_string(n) + " d=" + std::to_string(d) + " cell case " +
                                 (bad.empty() ? "" : std::to_string(bad.front().case_id)));
      o.require(grid_matches_engine(g), "grid n=" + std::to_string(n) + " d=" + std::to_string(d) + " vs engine");
    }
  }
  if (o.pass) o.detail << seeds << " (b, n) seeds purely periodic with 2(n+1)b+1; " << grids << " grids valid";
}

void c7(Outcome& o) {
  const auto t0 = Clock::now();
  const std::vector<std::uint64_t> want{7, 870, 208035, 83287204};
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const auto v = verify_family(n);
    o.require(v.verdict == FamilyVerdict::kExact && v.period == want[n - 1],
              "n=" + std::to_string(n) + " " + to_string(v.verdict) + " p=" + std::to_string(v.period));
  }
  const auto v5 = verify_family(5, 1'000'000);
  o.require(v5.verdict == FamilyVerdict::kDivisorConfirmed, "n=5 " + to_string(v5.verdict));
  o.require(v5.instance.component_lcm == 3364005645ULL, "n=5 lcm " + std::to_string(v5.instance.component_lcm));
  const double s = seconds_since(t0);
  o.require(s < 60, "took " + std::to_string(s) + " s");
  if (o.pass) {
    o.detail << "7, 870, 208035, 83287204 exact; n=5 lcm 3364005645 | per | " << v5.instance.divisor << "; " << s
             << " s";
  }
}

void c8(Outcome& o) {
  struct Row {
    MoveSet moves;
    const char* seed;
    std::uint64_t period;
  };
  const std::vector<Row> table{
      {{11, 16, 20}, "(01)^2 1^4 0 1^2", 61},  {{3, 11, 21}, "0^2 1 0 1^2 0", 61},
      {{7, 17, 23}, "(010)^2 0 1^2", 73},      {{10, 21, 23}, "0^2 1 0 1^4", 78},
      {{5, 11, 24}, "0 1^2 0^3 1^2 0 1 0", 65}, {{11, 16, 25}, "0 1^2 0 1 0^2 1^4", 56},
      {{16, 21, 25}, "0^2 (1 0 1^3)^2 0 1^2", 61}, {{13, 23, 25}, "0^2 1^2 0 1 0^2 1^5", 83}};
  const auto t0 = Clock::now();
  const auto found = find_superlinear_exceptions(25);
  std::set<std::pair<MoveSet, std::uint64_t>> got, want;
  for (const auto& e : found) got.insert({e.moves, e.max_period});
  for (const auto& r : table) {
    want.insert({r.moves, r.period});
    const auto e = parse_pattern(r.seed);
    const Seed s = normalize_seed(expand(e, e.finite_length()), r.moves);
    const auto p = find_periodicity(r.moves, s).period;
    o.require(p == r.period, r.moves.to_string() + " listed seed gives " + std::to_string(p));
  }
  o.require(got == want, std::to_string(found.size()) + " sets found, table has 8");
  if (o.pass) o.detail << "8 sets, periods and listed seeds match; " << seconds_since(t0) << " s";
}

void c9(Outcome& o) {
  for (const auto& r : run_oeis_checks()) {
    std::string why = r.id + " (" + r.source + ")";
    if (r.first_mismatch) why += " differs at n=" + std::to_string(*r.first_mismatch);
    o.require(r.match, why);
    if (r.match) o.detail << r.id << ": " << r.compared << " terms (" << r.source << "); ";
  }
  for (std::uint32_t l = 3; l <= 20; ++l) {
    o.require(mis_cycle_count(l).labeled == perrin(l), "MIS count at " + std::to_string(l));
  }
  const double rho = 1.3247179572447460;  // real root of x^3 = x + 1
  for (std::uint32_t l = 10; l <= 40; ++l) {
    o.require(perrin(l) == static_cast<std::uint64_t>(std::llround(std::pow(rho, l))),
              "Q(" + std::to_string(l) + ") vs rounding");
  }
  if (o.pass) o.detail << "MIS counts 3..20, rounding 10..40";
}

void c10(Outcome& o) {
  const auto t0 = Clock::now();
  const auto lin = scan_linear_bound(60);
  ScanConfig cfg;
  cfg.max_c = 12;
  cfg.seeds = SeedPolicy::kAll;
  const auto quad = scan_quadratic_bound(cfg);
  const auto conv = scan_extension_converse(8);
  const auto abc = scan_abc_per_bc(40);
  for (const auto* r : {&lin, &quad, &conv, &abc}) {
    o.require(r->ok(), r->target + ": " + std::to_string(r->counterexamples.size()) + " counterexamples");
    o.detail << r->target << " " << r->checked << " checked; ";
  }
  const double s = seconds_since(t0);
  o.require(s < 600, "took " + std::to_string(s) + " s");
  o.detail << s << " s";
}

void c11(Outcome& o) {
  for (const auto& s : props::all_suites()) {
    const auto r = s.run(1000, 20240611);
    o.require(r.ok() && r.instances >= 1000, r.name + ": " + r.first_failure);
    if (r.ok()) o.detail << r.name << " " << r.instances << "; ";
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const std::string flag = "--known-failures=";
    if (arg.rfind(flag, 0) != 0) {
      std::cerr << "usage: " << argv[0] << " [--known-failures=ID,ID...]\n";
      return 2;
    }
    std::istringstream in(arg.substr(flag.size()));
    std::string id;
    while (std::getline(in, id, ',')) known.insert(std::stoi(id));
  }
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"{2,4,7} report", c1},           {"two-move seeds and counts", c2}, {"sigma and {3,11} classes", c3},
      {"one, b, c closed forms", c4},   {"a, b, a+b periods", c5},         {"lemma seeds and grids", c6},
      {"superpolynomial family", c7},   {"exceptional sets", c8},          {"counting and OEIS", c9},
      {"conjecture scans", c10},        {"property suites", c11}};
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const int id = static_cast<int>(i + 1);
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
  }
  if (failed == known) return EXIT_SUCCESS;
  std::cout << "failing criteria differ from the expected set\n";
  return EXIT_FAILURE;
}
