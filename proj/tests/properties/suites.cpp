#include "suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "brute.hpp"
#include "subgame/engine.hpp"
#include "subgame/structure.hpp"

using namespace subgame;

namespace props {

namespace {

struct Instance {
  std::vector<unsigned> moves;
  std::string seed;  // empty for no seed
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

  std::vector<unsigned> moves(unsigned max_alpha, unsigned max_size) {
    const unsigned al = uniform(1, max_alpha);
    std::vector<unsigned> out{al};
    const unsigned k = uniform(1, std::min(max_size, al));
    while (out.size() < k) {
      const unsigned x = uniform(1, al);
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string bits(std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + uniform(0, 1));
    return s;
  }

  Instance instance(unsigned max_alpha, unsigned max_size, bool seeded) {
    Instance in;
    in.moves = moves(max_alpha, max_size);
    if (seeded && uniform(0, 3) != 0) in.seed = bits(in.moves.back());
    return in;
  }

 private:
  std::mt19937_64 rng_;
};

MoveSet to_set(const std::vector<unsigned>& m) { return MoveSet(std::vector<std::uint32_t>(m.begin(), m.end())); }

Seed to_seed(const Instance& in) {
  const auto al = in.moves.back();
  return in.seed.empty() ? Seed::none(al) : Seed{BitString::from_string(in.seed)};
}

std::string describe(const Instance& in) {
  std::ostringstream os;
  os << to_set(in.moves).to_string() << " seed=" << (in.seed.empty() ? "none" : in.seed);
  return os.str();
}

void fail(SuiteResult& r, const Instance& in, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = describe(in) + ": " + what;
}

}  // namespace

SuiteResult recurrence_soundness(std::uint64_t n, std::uint64_t rng_seed) {
  SuiteResult r{"recurrence soundness"};
  Gen g(rng_seed);
  for (; r.instances < n; ++r.instances) {
    const auto in = g.instance(24, 5, true);
    const auto a = to_set(in.moves);
    const std::size_t len = 300;
    const auto w = generate(a, to_seed(in), len).bits;
    // Check each bit directly against the recurrence, with seed values below zero.
    const std::string s = in.seed.empty() ? std::string(a.alpha(), '1') : in.seed;
    const auto at = [&](std::int64_t i) {
      return i < 0 ? s[static_cast<std::size_t>(i + a.alpha())] == '1' : w[static_cast<std::size_t>(i)];
    };
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      bool all = true;
      for (auto x : in.moves) all = all && at(static_cast<std::int64_t>(i) - x);
      ok = w[i] == !all;
    }
    if (!ok) fail(r, in, "bit breaks the recurrence");
    else if (w.to_string() != brute::str(brute::gen(in.moves, s, len))) fail(r, in, "differs from reference");
  }
  return r;
}

SuiteResult report_minimality(std::uint64_t n, std::uint64_t rng_seed) {
  SuiteResult r{"report minimality"};
  Gen g(rng_seed);
  for (; r.instances < n; ++r.instances) {
    const auto in = g.instance(16, 4, true);
    const auto a = to_set(in.moves);
    const auto rep = find_periodicity(a, to_seed(in));
    const std::uint64_t h = rep.preperiod + 3 * rep.period + a.alpha();
    const auto w = generate(a, to_seed(in), h).bits;
    if (rep.expand(h) != w) {
      fail(r, in, "prefix.cycle^inf differs from the sequence");
      continue;
    }
    bool minimal = true;
    for (std::uint64_t d = 1; d < rep.period && minimal; ++d) {
      if (rep.period % d != 0) continue;
      bool per = true;
      for (std::uint64_t i = rep.preperiod; i + d < h && per; ++i) per = w[i] == w[i + d];
      if (per) minimal = false;
    }
    if (!minimal) {
      fail(r, in, "a proper divisor of p is a period");
      continue;
    }
    if (rep.preperiod > 0 && w[rep.preperiod - 1] == w[rep.preperiod - 1 + rep.period]) {
      fail(r, in, "preperiod is not minimal");
    }
  }
  return r;
}

SuiteResult period_bound(std::uint64_t n, std::uint64_t rng_seed) {
  SuiteResult r{"period bound"};
  Gen g(rng_seed);
  for (; r.instances < n; ++r.instances) {
    const Instance in{g.moves(20, 5), ""};
    const auto a = to_set(in.moves);
    const auto rep = find_periodicity(a);
    const std::uint64_t bound = period_bound(a);
    if (rep.preperiod + rep.period > bound) fail(r, in, "N + p exceeds the bound");
  }
  return r;
}

SuiteResult linearity_interleaving(std::uint64_t n, std::uint64_t rng_seed) {
  SuiteResult r{"linearity interleaving"};
  Gen g(rng_seed);
  for (; r.instances < n; ++r.instances) {
    const unsigned k = g.uniform(1, 4);
    Instance in;
    for (auto x : g.moves(24 / k, 4)) in.moves.push_back(x * k);
    if (g.uniform(0, 3) != 0) in.seed = g.bits(in.moves.back());
    const auto a = to_set(in.moves);
    const auto s = to_seed(in);
    const auto parts = decompose(a, s);
    if (parts.size() != a.gcd()) {
      fail(r, in, "wrong number of components");
      continue;
    }
    const std::uint64_t len = 400;
    std::vector<BitString> ws;
    for (const auto& c : parts) ws.push_back(generate(c.moves, c.seed, len / parts.size() + 1).bits);
    if (interleave(ws, len) != generate(a, s, len).bits) fail(r, in, "interleaving differs");
  }
  return r;
}

SuiteResult pure_periodicity(std::uint64_t n, std::uint64_t rng_seed) {
  SuiteResult r{"pure periodicity equivalence"};
  Gen g(rng_seed);
  for (; r.instances < n; ++r.instances) {
    const auto in = g.instance(12, 4, true);
    const auto a = to_set(in.moves);
    const auto s = to_seed(in);
    const auto rep = find_periodicity(a, s);
    // Half the probes are multiples of the period so both outcomes occur.
    const std::uint64_t p = g.uniform(0, 1) ? rep.period * g.uniform(1, 3) : g.uniform(1, 60);
    const bool expect = rep.preperiod == 0 && p % rep.period == 0;
    if (check_pure_periodic(a, s, p) != expect) fail(r, in, "p=" + std::to_string(p));
  }
  return r;
}

SuiteResult pair_periods(std::uint64_t n, std::uint64_t rng_seed) {
  SuiteResult r{"pair periods divide a+b"};
  Gen g(rng_seed);
  for (; r.instances < n; ++r.instances) {
    const unsigned b = g.uniform(2, 16);
    const unsigned a = g.uniform(1, b - 1);
    const Instance in{{a, b}, g.bits(b)};
    const auto rep = find_periodicity(to_set(in.moves), to_seed(in));
    // Seeds that do not themselves satisfy the recurrence can leave a short preperiod.
    if ((a + b) % rep.period != 0) fail(r, in, "period does not divide a+b");
    else if (rep.preperiod >= b) fail(r, in, "preperiod reaches b");
  }
  return r;
}

SuiteResult extension_soundness(std::uint64_t n, std::uint64_t rng_seed) {
  SuiteResult r{"extension soundness"};
  Gen g(rng_seed);
  for (; r.instances < n; ++r.instances) {
    const Instance in{g.moves(10, 3), ""};
    const auto a = to_set(in.moves);
    const unsigned b = g.uniform(1, 60);
    if (a.contains(b)) continue;
    const std::size_t len = 2000;
    const std::string s(std::max(a.alpha(), b), '1');
    auto ab = in.moves;
    ab.push_back(b);
    const bool same = brute::gen(in.moves, s, len) == brute::gen(ab, s, len);
    if (is_extension(a, Seed::none(a.alpha()), b) != same) fail(r, in, "b=" + std::to_string(b));
  }
  return r;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {"recurrence soundness", recurrence_soundness},
      {"report minimality", report_minimality},
      {"period bound", period_bound},
      {"linearity interleaving", linearity_interleaving},
      {"pure periodicity equivalence", pure_periodicity},
      {"pair periods divide a+b", pair_periods},
      {"extension soundness", extension_soundness},
  };
  return suites;
}

}  // namespace props
