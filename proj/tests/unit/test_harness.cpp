#include <doctest.h>

#include "brute.hpp"
#include "subgame/harness.hpp"

using namespace subgame;

TEST_SUITE("harness") {
  TEST_CASE("small scans are clean") {
    const auto lin = scan_linear_bound(20);
    CHECK(lin.ok());
    CHECK(lin.checked == 1050);  // a + b = c triples are excluded
    ScanConfig cfg;
    cfg.max_c = 8;
    cfg.seeds = SeedPolicy::kAll;
    CHECK(scan_quadratic_bound(cfg).ok());
    CHECK(scan_abc_per_bc(20).ok());
    CHECK(scan_extension_converse(6).ok());
  }

  TEST_CASE("claims on single sets") {
    const MoveSet a{2, 4, 7};
    const Seed none = Seed::none(7);
    CHECK_FALSE(check_claim(claims::kLinearBound, a, none));
    CHECK_FALSE(check_claim(claims::kPeriodBound, a, none));
    CHECK(abc_condition(abc_variables(2, 4, 7), 2).empty());
    CHECK_FALSE(abc_truth(2, 4, 7));
    CHECK_THROWS_AS(check_claim("no-such-claim", a, none), std::invalid_argument);
    CHECK_THROWS_AS(check_claim(claims::kLinearBound, MoveSet{1, 2}, Seed::none(2)), std::invalid_argument);
  }

  TEST_CASE("forced counterexample records replay") {
    // {11, 16, 20} with a particular seed has period 61 > 2c, so it is a genuine record
    // for the linear bound under that seed; the unseeded claim is checked elsewhere.
    const MoveSet a{11, 16, 20};
    const Seed s = normalize_seed(BitString::from_string("01011111011"), a);
    const auto r = find_periodicity(a, s);
    CHECK(r.period == 61);
    const auto q = check_claim(claims::kQuadraticBound, MoveSet{2, 4, 7}, Seed::none(7));
    CHECK_FALSE(q);
    const auto rec = check_claim(claims::kExtensionConverse, MoveSet{1, 8, 13, 16}, Seed::none(16));
    REQUIRE(rec);
    CHECK(rec->preperiod > 0);
    CHECK(rec->replay());
    const auto back = record_from_json(record_to_json(*rec));
    CHECK(back.moves == rec->moves);
    CHECK(back.seed.bits == rec->seed.bits);
    CHECK(back.period == rec->period);
    CHECK(back.replay());
  }

  TEST_CASE("converse examples with four moves") {
    const auto c = extension_converse(MoveSet{1, 2, 6, 11}, Seed::none(11));
    CHECK(c.all_extensions);
    CHECK(c.preperiod == 1);
    CHECK(c.period == 12);
  }

  TEST_CASE("reports do not depend on the thread count") {
    const auto one = scan_abc_per_bc(18, 1);
    const auto four = scan_abc_per_bc(18, 4);
    CHECK(report_to_jsonl(one) == report_to_jsonl(four));
    ScanConfig cfg;
    cfg.max_c = 9;
    cfg.seeds = SeedPolicy::kSampled;
    cfg.sample = 16;
    const auto s1 = scan_quadratic_bound(cfg);
    cfg.threads = 3;
    const auto s3 = scan_quadratic_bound(cfg);
    CHECK(report_to_jsonl(s1) == report_to_jsonl(s3));
    CHECK(s1.checked == s3.checked);
  }

  TEST_CASE("abc window test against the brute oracle") {
    for (unsigned c = 4; c <= 16; ++c) {
      for (unsigned b = 3; b < c; ++b) {
        for (unsigned a = 2; a < b; ++a) {
          const auto np = brute::periodicity({a, b, c}, "", 6000);
          REQUIRE(np);
          const bool truth = np->first == 0 && np->second == b + c;
          CHECK(abc_truth(a, b, c) == truth);
          CHECK(abc_window_test(a, b, c) == (np->first == 0 && (b + c) % np->second == 0));
        }
      }
    }
  }

  TEST_CASE("superlinear exceptions") {
    const auto ex = find_superlinear_exceptions(20);
    const auto hit = std::find_if(ex.begin(), ex.end(), [](const ExceptionalSet& e) { return e.moves == MoveSet{11, 16, 20}; });
    REQUIRE(hit != ex.end());
    CHECK(hit->max_period == 61);
    CHECK(find_periodicity(hit->moves, hit->seed).period == 61);
  }

  TEST_CASE("serialization of reports") {
    ScanReport rep;
    rep.target = "t";
    rep.params = {{"x", 1}};
    rep.counterexamples.push_back({MoveSet{1, 2}, Seed{BitString::from_string("01")}, 3, 0, "c", {5}});
    const auto jl = report_to_jsonl(rep);
    CHECK(jl.find("\"target\":\"t\"") != std::string::npos);
    CHECK(std::count(jl.begin(), jl.end(), '\n') == 2);
    CHECK(report_to_csv(rep) == "claim,moves,seed,period,preperiod\nc,\"1,2\",01,3,0\n");
  }
}
