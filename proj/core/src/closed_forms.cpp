#include "subgame/closed_forms.hpp"

#include <numeric>

namespace subgame {

namespace {

using P = PatternExpr;

P z(std::uint64_t k) { return P::power(P::bit(false), k); }
P o(std::uint64_t k) { return P::power(P::bit(true), k); }
P rep(P e, std::uint64_t k) { return P::power(std::move(e), k); }
P cat(std::vector<P> parts) { return P::concat(std::move(parts)); }
P zo() { return cat({P::bit(false), P::bit(true)}); }  // 01
// (01)^k 1
P blk(std::uint64_t k) { return cat({rep(zo(), k), P::bit(true)}); }

std::uint64_t min_period(const BitString& x) {
  const std::uint64_t n = x.size();
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0 && x.rotate_left(d) == x) return d;
  }
  return n;
}

}  // namespace

nlohmann::json oracle_to_json(const OracleResult& r) {
  return {{"family", r.family},   {"params", r.params},       {"moves", r.moves.moves()},
          {"pattern", r.pattern ? nlohmann::json(render(*r.pattern)) : nlohmann::json(nullptr)}, {"period", r.period}, {"preperiod", r.preperiod},
          {"case", r.tag}};
}

OracleResult cf_single(std::uint32_t a, const Seed& s) {
  if (a == 0 || s.size() != a) throw DomainError("cf_single: need |S| = a > 0");
  const BitString cyc = s.bits.complement() + s.bits;
  return {"single", {{"a", a}, {"seed", s.to_string()}}, MoveSet{a},
          P::infinite(P::literal(cyc)), min_period(cyc), 0, ""};
}

std::set<std::uint64_t> periods_single(std::uint32_t a) {
  if (a == 0) throw DomainError("periods_single: a must be positive");
  std::uint64_t two = 1;
  std::uint32_t c = a;
  while (c % 2 == 0) {
    c /= 2;
    two *= 2;
  }
  std::set<std::uint64_t> out;
  for (std::uint32_t d = 1; d <= c; ++d) {
    if (c % d == 0) out.insert(2 * two * d);
  }
  return out;
}

OracleResult cf_pair(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || a >= b) throw DomainError("cf_pair: need 0 < a < b");
  const std::uint32_t q = b / a, r = b % a;
  const bool odd_multiple = r == 0 && q % 2 == 1;
  P pat = odd_multiple   ? P::infinite(cat({z(a), o(a)}))
          : q % 2 == 0 ? P::infinite(cat({rep(cat({z(a), o(a)}), q / 2), z(r), o(a)}))
                       : P::infinite(cat({rep(cat({z(a), o(a)}), (q + 1) / 2), o(r)}));
  const std::uint64_t p = odd_multiple ? 2ull * a : std::uint64_t{a} + b;
  return {"pair", {{"a", a}, {"b", b}}, MoveSet{a, b}, simplify(pat), p, 0, ""};
}

OracleResult cf_1bc(std::uint32_t b, std::uint32_t c) {
  if (!(1 < b && b < c)) throw DomainError("cf_1bc: need 1 < b < c");
  OracleResult res{"1bc", {{"b", b}, {"c", c}}, MoveSet{1, b, c}, std::nullopt, 0, 0, ""};
  const std::uint64_t B = b, C = c;
  if (b % 2 == 1) {
    if (c % 2 == 1) {
      res.tag = "i";
      res.pattern = P::infinite(zo());
      res.period = 2;
    } else {
      res.tag = "ii";
      res.pattern = P::infinite(cat({rep(zo(), C / 2), o(B)}));
      res.period = B + C;
    }
    return res;
  }
  const std::uint64_t k = B / 2;
  const std::uint64_t q = C / (B + 1);
  const std::uint64_t r = C % (B + 1);
  if (C == B + 1) {
    res.tag = "iii";
    res.pattern = P::infinite(cat({rep(zo(), k), o(B)}));
    res.period = 2 * B;
  } else if (r == 1 || r == B) {
    res.tag = "iv";
    res.pattern = P::infinite(blk(k));
    res.period = B + 1;
  } else if (r % 2 == 1) {
    res.tag = "v";
    res.pattern = P::infinite(cat({rep(blk(k), q + 1), o(r - 1)}));
    res.period = B + C;
  } else if (r + 2 == B) {
    res.tag = "vi";
    res.pattern = P::infinite(cat({rep(blk(k), q), blk(k - 1)}));
    res.period = C + 1;
  } else {
    // r even, r < b-2: a nonempty preperiod followed by one of two tails.
    const std::uint64_t gamma = (B - r - 2) / 2;
    const std::uint64_t m = std::min(q, gamma);
    std::vector<P> parts;
    for (std::uint64_t i = 0; i < m; ++i) {
      parts.push_back(cat({rep(blk(k), q - i), rep(blk(k - 1), i), rep(zo(), r / 2 + i),
                           o(2 * (gamma - i) + 1), blk(k - (gamma - i))}));
    }
    if (gamma <= q) {
      parts.push_back(P::infinite(cat({rep(blk(k), q - gamma), rep(blk(k - 1), gamma + 1)})));
    } else {
      parts.push_back(P::infinite(cat({rep(blk(k - 1), q), rep(zo(), r / 2 + q),
                                       o(2 * (gamma - q) + 1), blk(r / 2 + q)})));
    }
    res.pattern = cat(std::move(parts));
    res.tag = q > gamma ? "vii" : (q < gamma ? "viii" : "ix");
    res.period = q > gamma ? C + 1 : (q < gamma ? B + C : B - 1);
    res.preperiod = m * (B + C + 2) - B - 1;
  }
  res.pattern = simplify(*res.pattern);
  return res;
}

OracleResult cf_family_2s(std::uint32_t s) {
  if (s < 2) throw DomainError("cf_family_2s: need s >= 2");
  const std::uint64_t S = s;
  const MoveSet a{2 * s, 4 * s + 1, 22 * s + 2};
  return {"2s,4s+1,22s+2", {{"s", s}}, a, std::nullopt, 26 * S + 3, 24 * S * S - 4 * S - 1, ""};
}

OracleResult cf_family_k(std::uint32_t k) {
  if (k < 3 || k % 2 == 0) throw DomainError("cf_family_k: need odd k >= 3");
  const std::uint64_t K = k;
  const MoveSet a{k, k + 2, 2 * k + 3};
  return {"k,k+2,2k+3", {{"k", k}}, a, std::nullopt, 2, (3 * K * K - 5) / 2, ""};
}

std::vector<OracleResult> cf_known_3set_examples(std::uint32_t max_s, std::uint32_t max_k) {
  std::vector<OracleResult> out;
  for (std::uint32_t s = 2; s <= max_s; ++s) out.push_back(cf_family_2s(s));
  for (std::uint32_t k = 3; k <= max_k; k += 2) out.push_back(cf_family_k(k));
  return out;
}

OracleResult cf_ab_apb(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || a >= b) throw DomainError("cf_ab_apb: need 0 < a < b");
  const std::uint64_t A = a, B = b;
  const std::uint64_t k = (B - 1) / (2 * A);
  const std::uint64_t rho = B % (2 * A);
  OracleResult res{"ab_apb", {{"a", a}, {"b", b}}, MoveSet{a, b, a + b}, std::nullopt, 0, 0, ""};
  const P block = cat({z(A), o(A)});
  if (rho >= 1 && rho < A) {
    const std::uint64_t at = A / std::gcd(A, B);
    std::vector<P> terms;
    std::uint64_t prev = 0;
    for (std::uint64_t i = 1; i < at; ++i) {
      const std::uint64_t sig = i * B % A;
      const std::uint64_t delta = i == 1 ? 0 : (sig > prev ? 1 : 0);
      terms.push_back(cat({rep(block, k - delta), z(sig), o(B), z(A - sig), o(A)}));
      prev = sig;
    }
    terms.push_back(rep(block, k));
    terms.push_back(o(B));
    res.pattern = P::infinite(cat(std::move(terms)));
    res.period = at * (2 * B + rho);
    res.tag = "quadratic";
  } else {
    res.pattern = P::infinite(cat({rep(block, k), z(A), o(A + B)}));
    res.period = B + 2 * A * (k + 1);
    res.tag = "linear";
  }
  res.pattern = simplify(*res.pattern);
  return res;
}

}  // namespace subgame
