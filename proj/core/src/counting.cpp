#include "subgame/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace subgame {

namespace {

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count exceeds 64 bits");
  return r;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count exceeds 64 bits");
  return r;
}

std::vector<std::uint32_t> proper_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> d;
  for (std::uint32_t i = 1; i < n; ++i) {
    if (n % i == 0) d.push_back(i);
  }
  return d;
}

void blocks(std::uint32_t left, BitString& cur, std::unordered_set<BitString>& out) {
  if (left == 0) {
    for (std::size_t r = 0; r < cur.size(); ++r) out.insert(cur.rotate_left(r));
    return;
  }
  for (std::uint32_t len : {2u, 3u}) {
    if (len > left) continue;
    BitString next = cur;
    next.push_back(false);
    for (std::uint32_t i = 1; i < len; ++i) next.push_back(true);
    blocks(left - len, next, out);
  }
}

}  // namespace

std::vector<BitString> q_strings(std::uint32_t l) {
  std::unordered_set<BitString> set;
  BitString cur;
  blocks(l, cur, set);
  std::vector<BitString> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t perrin(std::uint32_t l) {
  std::uint64_t q0 = 3, q1 = 0, q2 = 2;
  if (l == 0) return q0;
  if (l == 1) return q1;
  for (std::uint32_t i = 2; i < l; ++i) {
    const std::uint64_t q3 = add_checked(q1, q0);
    q0 = q1;
    q1 = q2;
    q2 = q3;
  }
  return q2;
}

std::uint64_t n_prime(std::uint32_t l) { return n_prime_gcd(l, 1); }

std::uint64_t n_total(std::uint32_t L) { return n_total_gcd(L, 1); }

std::uint64_t n_prime_gcd(std::uint32_t L, std::uint32_t g) {
  if (g == 0 || L == 0 || L % g != 0) throw std::invalid_argument("n_prime_gcd: need g | L");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({L, g}); it != memo.end()) return it->second;
  }
  std::uint64_t total = 1;
  const std::uint64_t q = perrin(L / g);
  for (std::uint32_t i = 0; i < g; ++i) total = mul_checked(total, q);
  for (auto d : proper_divisors(L)) {
    const std::uint64_t sub = mul_checked(d, n_prime_gcd(d, std::gcd(d, g)));
    if (sub > total) throw std::logic_error("n_prime_gcd: negative class count");
    total -= sub;
  }
  if (total % L != 0) throw std::logic_error("n_prime_gcd: count not divisible by L");
  const std::uint64_t out = total / L;
  std::lock_guard lock(mu);
  memo[{L, g}] = out;
  return out;
}

std::uint64_t n_total_gcd(std::uint32_t L, std::uint32_t g) {
  if (g == 0 || L == 0 || L % g != 0) throw std::invalid_argument("n_total_gcd: need g | L");
  std::uint64_t t = n_prime_gcd(L, std::gcd(L, g));
  for (auto p : proper_divisors(L)) t = add_checked(t, n_prime_gcd(p, std::gcd(p, g)));
  return t;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (p == 1) return 0;
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not coprime");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

BitString sigma(std::uint64_t a, const BitString& x) {
  const std::uint64_t p = x.size();
  if (p == 0) return x;
  if (std::gcd(a % p, p) != 1 && p != 1) throw std::invalid_argument("sigma: gcd(a, p) != 1");
  BitString out(p);
  for (std::uint64_t n = 0; n < p; ++n) out.set(n, x[(a % p) * n % p]);
  return out;
}

BitString sigma_inverse(std::uint64_t a, const BitString& x) {
  return sigma(mod_inverse(a, x.size()), x);
}

std::set<std::uint64_t> periods_pair(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || a >= b) throw std::invalid_argument("periods_pair: need 0 < a < b");
  const std::uint64_t s = a + b;
  const std::uint64_t g = std::gcd(a, b);
  std::set<std::uint64_t> out;
  for (std::uint64_t p = 1; p <= s; ++p) {
    if (s % p != 0 || g % p == 0) continue;
    const std::uint64_t gp = std::gcd(p, g);
    if (p == 4 * gp) continue;
    if (p == 6 && gp == 1) continue;
    out.insert(p);
  }
  return out;
}

MisCount mis_cycle_count(std::uint32_t l) {
  if (l < 3 || l > 30) throw std::invalid_argument("mis_cycle_count: need 3 <= l <= 30");
  const std::uint32_t full = (1u << l) - 1;
  auto rot = [&](std::uint32_t m) { return ((m << 1) | (m >> (l - 1))) & full; };
  MisCount c;
  for (std::uint32_t m = 0; m <= full; ++m) {
    const std::uint32_t nb = rot(m) | ((m >> 1) | ((m & 1u) << (l - 1)));
    if (m & nb) continue;                  // two adjacent vertices
    if ((m | nb) != full) continue;        // some vertex could be added
    ++c.labeled;
    // Count each rotation class once, at its least representative.
    std::uint32_t r = m;
    bool least = true;
    for (std::uint32_t k = 1; k < l; ++k) {
      r = rot(r);
      if (r < m) {
        least = false;
        break;
      }
    }
    if (least) ++c.unlabeled;
  }
  return c;
}

std::vector<std::uint32_t> mis_vertices(const BitString& q) {
  std::vector<std::uint32_t> v;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q[i]) v.push_back(static_cast<std::uint32_t>(i + 1));
  }
  return v;
}

}  // namespace subgame
