#include <doctest.h>

#include "brute.hpp"
#include "subgame/closed_forms.hpp"
#include "subgame/superpoly.hpp"

using namespace subgame;

TEST_SUITE("superpoly") {
  TEST_CASE("lemma seeds") {
    const auto s17 = lemma_seed(1, 7);
    CHECK(s17.moves == MoveSet{1, 7, 8});
    CHECK(s17.period == 29);
    const auto r = find_periodicity(s17.moves, s17.seed);
    CHECK(r.period == 29);
    CHECK(r.preperiod == 0);
    for (std::uint32_t b = 3; b <= 21; b += 2) {
      const auto z = lemma_seed(0, b);
      CHECK(z.period == 2 * b + 1);
      CHECK(find_periodicity(z.moves, z.seed).period == 2 * b + 1);
    }
    CHECK(find_periodicity(lemma_seed(2, 11).moves, lemma_seed(2, 11).seed).period == 67);
    CHECK_THROWS_AS(lemma_seed(1, 8), DomainError);
    CHECK_THROWS_AS(lemma_seed(2, 9), DomainError);
  }

  TEST_CASE("lemma periods") {
    CHECK(lemma_periods(31) == std::vector<std::uint64_t>{63, 125, 187, 249, 311, 373, 435, 497});
    CHECK(lemma_periods(4).empty());
  }

  TEST_CASE("grid rows") {
    const auto g = build_grid(1, 0);
    CHECK(g.beta() == 5);
    CHECK(g.b() == 5);
    CHECK(g.rows() == 4);
    CHECK(g.row(0).to_string() == "110111");
    CHECK(g.row(1).to_string() == "0110");
    CHECK(g.row(2).to_string() == "111011");
    CHECK(g.row(3).to_string() == "01110");
    CHECK(g.y(0, 0) == true);
    CHECK(g.y(1, 0) == false);
    CHECK_THROWS_AS(g.index(1, 4), std::out_of_range);
  }

  TEST_CASE("grids satisfy the recurrence and match the engine") {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      for (std::uint32_t d = 0; d <= 4; ++d) {
        INFO("n=" << n << " d=" << d);
        const auto g = GridFilling(n, d);
        CHECK(validate_grid(g).empty());
        CHECK(g.flattened().size() == 2 * (n + 1) * g.b() + 1);
        CHECK(grid_matches_engine(g));
        // Independent check: the flattened row string regenerates itself under {1, b, b+1}.
        const auto& y = g.flattened();
        const std::string ys = y.to_string();
        const auto b = static_cast<unsigned>(g.b());
        const auto w = brute::gen({1, b, b + 1}, ys.substr(ys.size() - b - 1), 2 * ys.size());
        CHECK(brute::str(w) == ys + ys);
      }
    }
    const auto g13 = build_grid(1, 3);
    CHECK(g13.flattened().size() == 45);
  }

  TEST_CASE("grid cases cover every cell") {
    const auto g = GridFilling(2, 2);
    std::set<int> ids;
    for (std::uint32_t i = 0; i < g.rows(); ++i) {
      for (std::int64_t j = g.first_column(); j <= g.last_column(i); ++j) ids.insert(grid_case(g, i, j).id);
    }
    CHECK(ids == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  }

  TEST_CASE("family instances") {
    const auto f1 = super_family(1);
    CHECK(f1.moves == MoveSet{1, 3, 4});
    CHECK(f1.divisor == 7);
    const auto f2 = super_family(2);
    CHECK(f2.moves == MoveSet{2, 14, 16});
    CHECK(f2.seed.bits.to_string() == "1111111110111111");
    CHECK(f2.divisor == 870);
    const auto f3 = super_family(3);
    CHECK(f3.moves == MoveSet{3, 33, 36});
    CHECK(f3.component_periods == std::vector<std::uint64_t>{23, 45, 67});
    CHECK(f3.component_lcm == 69345);
    CHECK(f3.divisor == 208035);
    for (std::uint32_t n = 1; n <= 5; ++n) CHECK(components_match(super_family(n)));
    CHECK(super_family(5).component_lcm == 3364005645ULL);
  }

  TEST_CASE("family verification") {
    const auto v2 = verify_family(2, 10000);
    CHECK(v2.verdict == FamilyVerdict::kExact);
    CHECK(v2.period == 870);
    CHECK(v2.components_confirmed);
    const auto v3 = verify_family(3, 1000);
    CHECK(v3.verdict == FamilyVerdict::kDivisorConfirmed);
    CHECK(v3.observed_component_periods == std::vector<std::uint64_t>{23, 45, 67});
    CHECK(to_string(FamilyVerdict::kBudgetExceeded) == "budget-exceeded");
  }

  TEST_CASE("lcm heuristic") {
    const auto rows = lcm_heuristic(15);
    CHECK(rows.size() == 14);
    for (const auto& r : rows) {
      CHECK(r.log10_lcm + 1e-9 >= r.log10_lemma_lcm);
      CHECK(r.alpha == r.period_count * (r.b + 1));
    }
  }
}
