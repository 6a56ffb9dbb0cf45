#include "subgame/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace subgame {

std::size_t min_subperiod(const BitString& x) {
  const std::size_t n = x.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = x[i] == x[i - d];
    if (ok) return d;
  }
  return n;
}

std::size_t least_rotation(const BitString& x) {
  const std::size_t n = x.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return x[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const bool sj = at(j);
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {  // i == -1
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

CanonicalCycle canonicalize(const BitString& cycle) {
  if (cycle.empty()) throw std::invalid_argument("canonicalize: empty cycle");
  const BitString base = cycle.substr(0, min_subperiod(cycle));
  return CanonicalCycle{base.rotate_left(least_rotation(base))};
}

namespace {

constexpr std::uint32_t kUnseen = 0xFFFFFFFFu;
constexpr std::uint32_t kOnPath = 0xFFFFFFFEu;

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t n) : w_((n + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto v : w_) c += static_cast<std::uint64_t>(__builtin_popcountll(v));
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t k = 0; k < w_.size(); ++k) {
      std::uint64_t v = w_[k];
      while (v) {
        f(k * 64 + static_cast<std::uint64_t>(__builtin_ctzll(v)));
        v &= v - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

BitString cycle_bits(const detail::NarrowDynamics& d, std::uint64_t rep, std::uint64_t len) {
  BitString out;
  out.reserve(len);
  std::uint64_t s = rep;
  for (std::uint64_t i = 0; i < len; ++i) {
    out.push_back(d.next_bit(s));
    s = d.advance(s);
  }
  return out;
}

void windows_rec(const MoveSet& a, std::uint32_t j, std::uint64_t state,
                 const std::function<void(std::uint64_t)>& fn) {
  const std::uint32_t al = a.alpha();
  if (j == al) {
    fn(state);
    return;
  }
  // Window position j is state bit al-1-j; w(j) = 0 needs ones at j-x for every x <= j.
  const std::uint64_t one = std::uint64_t{1} << (al - 1 - j);
  windows_rec(a, j + 1, state | one, fn);
  for (auto x : a.moves()) {
    if (x > j) break;
    if (!((state >> (al - 1 - (j - x))) & 1u)) return;
  }
  windows_rec(a, j + 1, state, fn);
}

void for_each_consistent_window(const MoveSet& a, const std::function<void(std::uint64_t)>& fn) {
  windows_rec(a, 0, 0, fn);
}

}  // namespace

std::vector<std::uint64_t> consistent_windows(const MoveSet& a) {
  if (a.alpha() > 64) throw std::invalid_argument("consistent_windows: alpha > 64");
  std::vector<std::uint64_t> out;
  for_each_consistent_window(a, [&](std::uint64_t s) { out.push_back(s); });
  return out;
}

namespace {

// Walks every consistent window; index(s) maps a window to a slot in [0, slots).
template <class Index>
std::map<std::uint64_t, std::uint64_t> walk_cycles(const MoveSet& a, std::uint64_t slots, Index index) {
  const detail::NarrowDynamics d(a);
  Bitmap visited(slots);
  Bitmap done(slots);
  std::vector<std::uint64_t> path;
  std::map<std::uint64_t, std::uint64_t> out;
  for_each_consistent_window(a, [&](std::uint64_t s) {
    if (visited.test(index(s))) return;
    path.clear();
    while (!visited.test(index(s))) {
      visited.set(index(s));
      path.push_back(s);
      s = d.advance(s);
    }
    if (!done.test(index(s))) {
      std::uint64_t len = 1;
      for (std::uint64_t t = d.advance(s); t != s; t = d.advance(t)) ++len;
      out.emplace(len, s);
    }
    for (auto p : path) done.set(index(p));
  });
  return out;
}

constexpr std::uint64_t kMaxWindowList = std::uint64_t{1} << 25;

}  // namespace

std::map<std::uint64_t, std::uint64_t> cycle_representatives(const MoveSet& a) {
  const std::uint32_t al = a.alpha();
  if (al <= 30) return walk_cycles(a, std::uint64_t{1} << al, [](std::uint64_t s) { return s; });
  if (al > 64) throw ResourceLimitError("cycle_representatives: alpha > 64");
  // Wider windows: index the sorted list of consistent windows instead of all 2^alpha.
  std::vector<std::uint64_t> ws;
  for_each_consistent_window(a, [&](std::uint64_t s) {
    if (ws.size() == kMaxWindowList) {
      throw ResourceLimitError("cycle_representatives: more than 2^25 consistent windows for " + a.to_string());
    }
    ws.push_back(s);
  });
  std::sort(ws.begin(), ws.end());
  return walk_cycles(a, ws.size(), [&](std::uint64_t s) {
    return static_cast<std::uint64_t>(std::lower_bound(ws.begin(), ws.end(), s) - ws.begin());
  });
}

std::set<std::uint64_t> cycle_lengths(const MoveSet& a) {
  std::set<std::uint64_t> out;
  for (const auto& [len, rep] : cycle_representatives(a)) out.insert(len);
  return out;
}

SeedAtlas enumerate_seeds(const MoveSet& a, const AtlasOptions& opt) {
  const std::uint32_t al = a.alpha();
  if (al > opt.max_alpha) {
    throw ResourceLimitError("seed atlas for " + a.to_string() + " needs 2^" + std::to_string(al) +
                             " states; raise max_alpha to " + std::to_string(al));
  }
  const detail::NarrowDynamics d(a);
  const std::uint64_t n = std::uint64_t{1} << al;
  SeedAtlas atlas;
  atlas.moves_ = a;
  atlas.dist_.assign(n, 0);
  atlas.cycle_of_.assign(n, kUnseen);
  auto& dist = atlas.dist_;
  auto& cyc = atlas.cycle_of_;
  std::vector<std::uint32_t> path;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (cyc[start] != kUnseen) continue;
    path.clear();
    std::uint64_t s = start;
    while (cyc[s] == kUnseen) {
      cyc[s] = kOnPath;
      dist[s] = static_cast<std::uint32_t>(path.size());
      path.push_back(static_cast<std::uint32_t>(s));
      s = d.advance(s);
    }
    std::size_t tail_end = path.size();  // path[0..tail_end) are off-cycle
    std::uint32_t id = 0;
    std::uint32_t base = 0;  // dist of the state the path runs into
    if (cyc[s] == kOnPath) {
      const std::size_t at = dist[s];
      id = static_cast<std::uint32_t>(atlas.cycles_.size());
      SeedAtlas::CycleInfo info;
      info.period = path.size() - at;
      info.representative = s;
      info.canonical = canonicalize(cycle_bits(d, s, info.period));
      atlas.cycles_.push_back(std::move(info));
      for (std::size_t i = at; i < path.size(); ++i) {
        cyc[path[i]] = id;
        dist[path[i]] = 0;
      }
      tail_end = at;
    } else {
      id = cyc[s];
      base = dist[s];
    }
    for (std::size_t i = 0; i < tail_end; ++i) {
      cyc[path[i]] = id;
      dist[path[i]] = base + static_cast<std::uint32_t>(tail_end - i);
    }
    atlas.cycles_[id].seeds += path.size();
  }
  return atlas;
}

std::uint64_t SeedAtlas::preperiod(std::uint64_t seed) const {
  const std::uint64_t mu = dist_[seed];
  return mu > moves_.alpha() ? mu - moves_.alpha() : 0;
}

PeriodicityReport SeedAtlas::report(std::uint64_t seed) const {
  const Seed s{BitString::from_uint(seed, moves_.alpha())};
  const std::uint64_t n = preperiod(seed);
  const std::uint64_t p = period(seed);
  const BitString w = generate(moves_, s, n + p).bits;
  return PeriodicityReport{moves_, s, n, p, w.substr(0, n), w.substr(n, p), true};
}

std::set<std::uint64_t> SeedAtlas::periods() const {
  std::set<std::uint64_t> out;
  for (const auto& c : cycles_) out.insert(c.period);
  return out;
}

std::set<CanonicalCycle> SeedAtlas::classes() const {
  std::set<CanonicalCycle> out;
  for (const auto& c : cycles_) out.insert(c.canonical);
  return out;
}

std::map<std::uint64_t, std::uint64_t> SeedAtlas::class_counts() const {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& c : classes()) ++out[c.bits.size()];
  return out;
}

std::uint64_t SeedAtlas::sequence_count() const {
  const detail::NarrowDynamics d(moves_);
  const std::uint64_t n = seed_count();
  Bitmap cur(n);
  for (std::uint64_t s = 0; s < n; ++s) cur.set(s);
  for (std::uint32_t i = 0; i < moves_.alpha(); ++i) {
    Bitmap next(n);
    cur.for_each([&](std::uint64_t s) { next.set(d.advance(s)); });
    cur = std::move(next);
  }
  return cur.count();
}

std::uint64_t SeedAtlas::recurrent_sequence_count() const {
  std::uint64_t t = 0;
  for (const auto& c : cycles_) t += c.period;
  return t;
}

std::uint64_t SeedAtlas::max_preperiod() const {
  std::uint64_t m = 0;
  for (std::uint64_t s = 0; s < dist_.size(); ++s) m = std::max(m, preperiod(s));
  return m;
}

std::map<std::uint64_t, std::set<CanonicalCycle>> distinct_periodicities(const SeedAtlas& atlas) {
  std::map<std::uint64_t, std::set<CanonicalCycle>> out;
  for (const auto& c : atlas.classes()) out[c.bits.size()].insert(c);
  return out;
}

std::string atlas_to_csv(const SeedAtlas& atlas) {
  std::ostringstream os;
  os << "seed,preperiod,period,cycle\n";
  const std::uint32_t al = atlas.moves().alpha();
  for (std::uint64_t s = 0; s < atlas.seed_count(); ++s) {
    os << BitString::from_uint(s, al).to_string() << ',' << atlas.preperiod(s) << ','
       << atlas.period(s) << ',' << atlas.canonical(s).bits.to_string() << '\n';
  }
  return os.str();
}

}  // namespace subgame
