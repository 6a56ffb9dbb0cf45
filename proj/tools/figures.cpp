#include <iostream>
#include <set>

#include <subgame/closed_forms.hpp>
#include <subgame/enumeration.hpp>
#include <subgame/superpoly.hpp>

#include "cli.hpp"

using namespace subgame;

namespace cli {

namespace {

// Preperiods of {1, b, c}: existence map (figure 2) or lengths (figure 3).
void one_b_c(const Common& c, bool lengths, std::ostream& out) {
  const std::uint32_t max_c = c.full_ranges ? 120 : 60;
  out << (lengths ? "b,c,preperiod\n" : "b,c,has_preperiod\n");
  for (std::uint32_t b = 2; b < max_c; ++b) {
    for (std::uint32_t cc = b + 1; cc <= max_c; ++cc) {
      const auto r = find_periodicity(MoveSet{1, b, cc});
      if (lengths && r.preperiod == 0) continue;
      out << b << ',' << cc << ',' << (lengths ? r.preperiod : (r.preperiod > 0 ? 1 : 0)) << '\n';
    }
  }
}

// per({a, b, a+b}) for fixed a.
void ab_apb(const Common& c, bool extreme, std::ostream& out) {
  out << "a,b,period,series\n";
  if (extreme) {
    const std::uint32_t a = 360;
    const std::uint32_t max_b = c.full_ranges ? 4 * a : 2 * a;
    for (std::uint32_t b = a + 1; b <= max_b; ++b) out << a << ',' << b << ',' << cf_ab_apb(a, b).period << ",closed-form\n";
    return;
  }
  const std::uint32_t max_b = c.full_ranges ? 400 : 150;
  for (std::uint32_t a : {12u, 13u}) {
    for (std::uint32_t b = a + 1; b <= max_b; ++b) {
      out << a << ',' << b << ',' << find_periodicity(MoveSet{a, b, a + b}).period << ",engine\n";
    }
  }
}

// All periods of {1, b, b+1}, the lemma periods, and the unseeded period.
void one_b_b1(const Common& c, const std::string& moves, std::ostream& out) {
  const std::uint32_t enum_limit = c.full_ranges ? 35 : 20;  // on b + 1
  std::uint32_t lo = 2, hi = 34;
  if (!moves.empty()) {
    const MoveSet a = parse_moves(moves);
    const auto& m = a.moves();
    if (m.size() != 3 || m[0] != 1 || m[2] != m[1] + 1) throw UsageError("figure 7 takes a set {1,b,b+1}");
    lo = hi = m[1];
    if (m[2] > enum_limit) {
      std::cerr << "note: enumerating {1," << m[1] << ',' << m[2]
                << "} needs --full-ranges; emitting closed-form series only\n";
    }
  }
  out << "b,period,series\n";
  for (std::uint32_t b = lo; b <= hi; ++b) {
    if (b + 1 <= enum_limit) {
      for (auto p : cycle_lengths(MoveSet{1, b, b + 1})) out << b << ',' << p << ",enumerated\n";
    }
    for (auto p : lemma_periods(b)) out << b << ',' << p << ",lemma\n";
    out << b << ',' << find_periodicity(MoveSet{1, b, b + 1}).period << ",default\n";
  }
}

}  // namespace

int run_figure(const Common& c, int id, const std::string& moves, std::ostream& out) {
  if (c.format == Format::kJson) throw UsageError("figure data is CSV only");
  switch (id) {
    case 2:
    case 3:
      one_b_c(c, id == 3, out);
      break;
    case 5:
    case 6:
      ab_apb(c, id == 6, out);
      break;
    case 7:
      one_b_b1(c, moves, out);
      break;
    case 8: {
      out << "b,period_count,alpha,log10_lcm,log10_lemma_lcm\n";
      for (const auto& r : lcm_heuristic(c.full_ranges ? 30 : 20)) {
        out << r.b << ',' << r.period_count << ',' << r.alpha << ',' << r.log10_lcm << ',' << r.log10_lemma_lcm << '\n';
      }
      break;
    }
    default:
      throw UsageError("no figure " + std::to_string(id));
  }
  return kOk;
}

}  // namespace cli
