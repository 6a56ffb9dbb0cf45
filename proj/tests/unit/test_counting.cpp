#include <doctest.h>

#include <cmath>

#include "subgame/counting.hpp"
#include "subgame/enumeration.hpp"

using namespace subgame;

namespace {

std::vector<std::string> strs(const std::vector<BitString>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

// Rotation classes of primitive Q-strings of length l, counted directly.
std::uint64_t brute_n_prime(std::uint32_t l) {
  std::set<CanonicalCycle> seen;
  for (const auto& q : q_strings(l)) {
    if (min_subperiod(q) == q.size()) seen.insert(canonicalize(q));
  }
  return seen.size();
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("Q-strings") {
    CHECK(strs(q_strings(2)) == std::vector<std::string>{"01", "10"});
    CHECK(strs(q_strings(3)) == std::vector<std::string>{"011", "101", "110"});
    CHECK(q_strings(6).size() == 5);
    for (std::uint32_t l = 2; l <= 20; ++l) CHECK(q_strings(l).size() == perrin(l));
  }

  TEST_CASE("Perrin numbers") {
    const std::vector<std::uint64_t> head{3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29, 39};
    for (std::uint32_t l = 0; l < head.size(); ++l) CHECK(perrin(l) == head[l]);
    CHECK(perrin(14) == 51);
    CHECK(perrin(20) == 277);
    const double rho = 1.3247179572447460;  // real root of x^3 = x + 1
    for (std::uint32_t l = 10; l <= 40; ++l) {
      CHECK(perrin(l) == static_cast<std::uint64_t>(std::llround(std::pow(rho, l))));
    }
    CHECK_THROWS_AS(perrin(400), std::overflow_error);
  }

  TEST_CASE("class counts") {
    CHECK(n_prime(14) == 3);
    CHECK(n_total(14) == 5);
    CHECK(n_prime(20) == 13);
    CHECK(n_total(20) == 16);
    CHECK(n_prime(4) == 0);
    CHECK(n_prime(6) == 0);
    CHECK(n_total(4) == 1);
    for (std::uint32_t l = 1; l <= 24; ++l) CHECK(n_prime(l) == brute_n_prime(l));
  }

  TEST_CASE("gcd-refined counts") {
    for (std::uint32_t p = 1; p <= 30; ++p) CHECK(n_prime_gcd(p, 1) == n_prime(p));
    for (std::uint32_t g = 1; g <= 6; ++g) {
      for (std::uint32_t L = g; L <= 60; L += g) {
        const bool zero = L == g || L == 4 * g || (L == 6 && g == 1);
        INFO("L=" << L << " g=" << g);
        CHECK((n_prime_gcd(L, g) == 0) == zero);
      }
    }
  }

  TEST_CASE("sigma") {
    const auto x = BitString::from_string("01" + std::string("011011011011"));
    const auto y = sigma(5, x);
    CHECK(y.to_string() == "00111001110111");
    CHECK(sigma_inverse(5, y) == x);
    CHECK(mod_inverse(5, 14) == 3);
    CHECK_THROWS_AS(sigma(7, x), std::invalid_argument);
  }

  TEST_CASE("periods of pairs") {
    CHECK(periods_pair(1, 2) == std::set<std::uint64_t>{3});
    CHECK(periods_pair(3, 5) == std::set<std::uint64_t>{2, 8});
    CHECK(periods_pair(2, 4) == std::set<std::uint64_t>{3, 6});
    for (std::uint32_t b = 2; b <= 10; ++b) {
      for (std::uint32_t a = 1; a < b; ++a) {
        INFO("a=" << a << " b=" << b);
        CHECK(periods_pair(a, b) == enumerate_seeds(MoveSet{a, b}).periods());
      }
    }
  }

  TEST_CASE("maximal independent sets of cycles") {
    CHECK(mis_cycle_count(3).labeled == 3);
    CHECK(mis_cycle_count(14).labeled == 51);
    for (std::uint32_t l = 3; l <= 16; ++l) {
      CHECK(mis_cycle_count(l).labeled == perrin(l));
      CHECK(mis_cycle_count(l).unlabeled == n_total(l));
    }
    CHECK(mis_vertices(BitString::from_string("0101011011")) == std::vector<std::uint32_t>{1, 3, 5, 8});
  }
}
