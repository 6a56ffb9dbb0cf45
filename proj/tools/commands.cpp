#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <subgame/closed_forms.hpp>
#include <subgame/enumeration.hpp>
#include <subgame/harness.hpp>
#include <subgame/pattern.hpp>
#include <subgame/serialization.hpp>
#include <subgame/superpoly.hpp>

#include "cli.hpp"

using namespace subgame;
using nlohmann::json;

namespace cli {

namespace {

bool is_bits(const std::string& s) { return s.find_first_not_of("01") == std::string::npos; }

std::vector<std::uint32_t> parse_params(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw UsageError("bad parameter '" + tok + "'");
    }
  }
  return out;
}

std::uint32_t param(const std::vector<std::uint32_t>& ps, std::size_t i, const std::string& what) {
  if (i >= ps.size()) throw UsageError("missing parameter " + what);
  return ps[i];
}

EngineOptions options(const Common& c) {
  EngineOptions opt;
  opt.max_steps = c.budget;
  return opt;
}

PatternExpr report_pattern(const PeriodicityReport& r) {
  return PatternExpr::eventually_periodic(r.prefix, r.cycle);
}

struct Check {
  OracleResult oracle;
  PeriodicityReport engine;
  bool agrees = false;
};

Check check(const OracleResult& o, const Seed& s) {
  Check c{o, find_periodicity(o.moves, s), false};
  c.agrees = c.engine.period == o.period && c.engine.preperiod == o.preperiod;
  if (c.agrees && o.pattern) {
    const std::uint64_t h = o.preperiod + 3 * o.period + o.moves.alpha();
    c.agrees = expand(*o.pattern, h) == c.engine.expand(h);
  }
  return c;
}

Check check(const OracleResult& o) { return check(o, Seed::none(o.moves.alpha())); }

json check_json(const Check& c) {
  json j = oracle_to_json(c.oracle);
  j["engine"] = {{"preperiod", c.engine.preperiod}, {"period", c.engine.period}};
  j["agrees"] = c.agrees;
  return j;
}

void print_scan(const Common& c, const ScanReport& r, std::ostream& out) {
  switch (c.format) {
    case Format::kJson:
      out << report_to_jsonl(r);
      return;
    case Format::kCsv:
      out << report_to_csv(r);
      return;
    case Format::kText:
      break;
  }
  out << r.target << ": " << r.checked << " checked, " << r.counterexamples.size() << " counterexamples\n";
  out << "params " << r.params.dump() << '\n';
  out << "summary " << r.summary.dump() << '\n';
  for (const auto& x : r.counterexamples) {
    out << "  " << x.claim << ' ' << x.moves.to_string() << " seed " << x.seed.to_string() << " N=" << x.preperiod
        << " p=" << x.period << '\n';
  }
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw UsageError("unknown format '" + s + "'");
}

MoveSet parse_moves(const std::string& s) {
  try {
    return MoveSet::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad move set: ") + e.what());
  }
}

Seed parse_seed(const std::string& s, const MoveSet& a) {
  if (s.empty()) return Seed::none(a.alpha());
  if (s == "misere") return mode_seed(PlayMode::kMisere, a);
  if (s == "greedy") return mode_seed(PlayMode::kGreedy, a);
  if (is_bits(s)) return normalize_seed(BitString::from_string(s), a);
  try {
    const PatternExpr e = parse_pattern(s);
    if (e.has_tail()) throw UsageError("a seed pattern must be finite");
    return normalize_seed(expand(e, e.finite_length()), a);
  } catch (const PatternSyntaxError& e) {
    throw UsageError(std::string("bad seed: ") + e.what());
  }
}

OeisClient make_oeis_client(const Common& c) {
  OeisClient client;
  if (c.oeis_cache) client.set_cache_dir(*c.oeis_cache);
  if (c.live && !install_live_fetcher(client)) {
    std::cerr << "warning: built without live OEIS support; using cache and snapshots\n";
  }
  return client;
}

#ifndef SUBGAME_HAVE_LIVE_OEIS
bool install_live_fetcher(OeisClient&) { return false; }
#endif

int run_analyze(const Common& c, const std::string& moves, const std::string& seed,
                std::optional<std::uint64_t> horizon, std::ostream& out) {
  const MoveSet a = parse_moves(moves);
  const Seed s = parse_seed(seed, a);
  const PeriodicityReport r = find_periodicity(a, s, options(c));
  std::optional<BitString> head;
  if (horizon) head = generate(a, s, *horizon).bits;
  switch (c.format) {
    case Format::kJson: {
      json j = report_to_json(r);
      if (r.materialized) j["pattern"] = render(report_pattern(r));
      if (head) j["bits"] = head->to_string();
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "moves,seed,preperiod,period,prefix,cycle\n"
          << '"' << a.to_csv() << "\"," << s.to_string() << ',' << r.preperiod << ',' << r.period << ','
          << r.prefix.to_string() << ',' << r.cycle.to_string() << '\n';
      break;
    case Format::kText:
      out << "moves     " << a.to_string() << '\n'
          << "seed      " << s.to_string() << (s.is_none() ? " (none)" : "") << '\n'
          << "preperiod " << r.preperiod << '\n'
          << "period    " << r.period << '\n';
      if (r.materialized) {
        out << "prefix    " << r.prefix.to_string() << '\n'
            << "cycle     " << r.cycle.to_string() << '\n'
            << "pattern   " << render(report_pattern(r)) << '\n';
      } else {
        out << "(prefix and cycle too long to store)\n";
      }
      if (head) out << "bits      " << head->to_string() << '\n';
      break;
  }
  return kOk;
}

int run_seeds(const Common& c, const std::string& moves, std::ostream& out) {
  const MoveSet a = parse_moves(moves);
  AtlasOptions opt;
  if (c.full_ranges) opt.max_alpha = 30;
  if (a.alpha() > opt.max_alpha) {
    throw UsageError("alpha=" + std::to_string(a.alpha()) + " exceeds " + std::to_string(opt.max_alpha) +
                     (c.full_ranges ? "" : "; pass --full-ranges to allow up to 30"));
  }
  const SeedAtlas atlas = enumerate_seeds(a, opt);
  if (c.format == Format::kCsv) {
    out << atlas_to_csv(atlas);
    return kOk;
  }
  const auto by_length = distinct_periodicities(atlas);
  if (c.format == Format::kJson) {
    json classes = json::object();
    for (const auto& [len, set] : by_length) {
      json xs = json::array();
      for (const auto& x : set) xs.push_back(x.bits.to_string());
      classes[std::to_string(len)] = xs;
    }
    out << json{{"moves", a.moves()},
                {"seeds", atlas.seed_count()},
                {"periods", atlas.periods()},
                {"sequences", atlas.sequence_count()},
                {"recurrent_sequences", atlas.recurrent_sequence_count()},
                {"max_preperiod", atlas.max_preperiod()},
                {"classes", classes}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "moves               " << a.to_string() << '\n'
      << "seeds               " << atlas.seed_count() << '\n'
      << "sequences           " << atlas.sequence_count() << '\n'
      << "recurrent sequences " << atlas.recurrent_sequence_count() << '\n'
      << "max preperiod       " << atlas.max_preperiod() << '\n'
      << "periods            ";
  for (auto p : atlas.periods()) out << ' ' << p;
  out << '\n';
  for (const auto& [len, set] : by_length) {
    out << "  length " << len << ": " << set.size() << " class" << (set.size() == 1 ? "" : "es") << '\n';
    for (const auto& x : set) out << "    " << render(PatternExpr::literal(x.bits)) << '\n';
  }
  return kOk;
}

int run_theorem(const Common& c, const std::string& family, const std::string& params, const std::string& seed,
                std::optional<std::uint32_t> sweep, std::ostream& out) {
  std::vector<Check> checks;
  if (sweep) {
    const std::uint32_t m = *sweep;
    if (family == "single") {
      if (m > 16) throw UsageError("single sweep covers every seed; keep --sweep <= 16");
      for (std::uint32_t a = 1; a <= m; ++a) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << a); ++v) {
          const Seed s{BitString::from_uint(v, a)};
          checks.push_back(check(cf_single(a, s), s));
        }
      }
    } else if (family == "pair" || family == "ab-apb") {
      for (std::uint32_t b = 2; b <= m; ++b) {
        for (std::uint32_t a = 1; a < b; ++a) checks.push_back(check(family == "pair" ? cf_pair(a, b) : cf_ab_apb(a, b)));
      }
    } else if (family == "1bc") {
      for (std::uint32_t cc = 3; cc <= m; ++cc) {
        for (std::uint32_t b = 2; b < cc; ++b) checks.push_back(check(cf_1bc(b, cc)));
      }
    } else if (family == "2s") {
      for (std::uint32_t s = 2; s <= m; ++s) checks.push_back(check(cf_family_2s(s)));
    } else {
      for (std::uint32_t k = 3; k <= m; k += 2) checks.push_back(check(cf_family_k(k)));
    }
  } else {
    const auto ps = parse_params(params);
    if (family == "single") {
      const std::uint32_t a = param(ps, 0, "a");
      const Seed s = seed.empty() ? Seed::none(a) : parse_seed(seed, MoveSet{a});
      checks.push_back(check(cf_single(a, s), s));
    } else if (family == "pair") {
      checks.push_back(check(cf_pair(param(ps, 0, "a"), param(ps, 1, "b"))));
    } else if (family == "1bc") {
      checks.push_back(check(cf_1bc(param(ps, 0, "b"), param(ps, 1, "c"))));
    } else if (family == "ab-apb") {
      checks.push_back(check(cf_ab_apb(param(ps, 0, "a"), param(ps, 1, "b"))));
    } else if (family == "2s") {
      checks.push_back(check(cf_family_2s(param(ps, 0, "s"))));
    } else {
      checks.push_back(check(cf_family_k(param(ps, 0, "k"))));
    }
  }

  std::size_t bad = 0;
  for (const auto& x : checks) bad += x.agrees ? 0 : 1;
  switch (c.format) {
    case Format::kJson: {
      json rows = json::array();
      for (const auto& x : checks) {
        if (!sweep || !x.agrees) rows.push_back(check_json(x));
      }
      out << json{{"family", family}, {"checked", checks.size()}, {"mismatches", bad}, {"results", rows}}.dump(2)
          << '\n';
      break;
    }
    case Format::kCsv:
      out << "moves,case,oracle_preperiod,oracle_period,engine_preperiod,engine_period,agrees\n";
      for (const auto& x : checks) {
        out << '"' << x.oracle.moves.to_csv() << "\"," << x.oracle.tag << ',' << x.oracle.preperiod << ','
            << x.oracle.period << ',' << x.engine.preperiod << ',' << x.engine.period << ','
            << (x.agrees ? 1 : 0) << '\n';
      }
      break;
    case Format::kText:
      for (const auto& x : checks) {
        if (sweep && x.agrees) continue;
        out << x.oracle.moves.to_string();
        if (!x.oracle.tag.empty()) out << " case " << x.oracle.tag;
        out << ": oracle N=" << x.oracle.preperiod << " p=" << x.oracle.period << ", engine N="
            << x.engine.preperiod << " p=" << x.engine.period << (x.agrees ? "  agree" : "  DISAGREE") << '\n';
        if (x.oracle.pattern) out << "  pattern " << render(*x.oracle.pattern) << '\n';
      }
      if (sweep) out << checks.size() << " checked, " << bad << " mismatches\n";
      break;
  }
  return bad == 0 ? kOk : kCounterexample;
}

int run_scan(const Common& c, const std::string& target, std::uint32_t max, const std::string& seeds,
             std::uint64_t sample, std::uint64_t rng_seed, std::ostream& out) {
  if (target == "exceptions") {
    const auto found = find_superlinear_exceptions(max, c.threads);
    if (c.format == Format::kJson) {
      json rows = json::array();
      for (const auto& e : found) {
        rows.push_back({{"moves", e.moves.moves()}, {"max_period", e.max_period}, {"seed", e.seed.to_string()}});
      }
      out << rows.dump(2) << '\n';
    } else {
      if (c.format == Format::kCsv) out << "moves,max_period,seed\n";
      for (const auto& e : found) {
        if (c.format == Format::kCsv) {
          out << '"' << e.moves.to_csv() << "\"," << e.max_period << ',' << e.seed.to_string() << '\n';
        } else {
          out << e.moves.to_string() << " max period " << e.max_period << " seed " << e.seed.to_string() << '\n';
        }
      }
    }
    return kOk;
  }
  ScanReport r;
  if (target == "linear") {
    r = scan_linear_bound(max, c.threads);
  } else if (target == "quadratic") {
    ScanConfig cfg;
    cfg.max_c = max;
    cfg.seeds = seeds == "all" ? SeedPolicy::kAll : seeds == "sampled" ? SeedPolicy::kSampled : SeedPolicy::kNone;
    cfg.sample = sample;
    cfg.rng_seed = rng_seed;
    cfg.threads = c.threads;
    r = scan_quadratic_bound(cfg);
  } else if (target == "abc") {
    r = scan_abc_per_bc(max, c.threads);
  } else {
    if (max > 16 && !c.full_ranges) throw UsageError("converse scan above alpha 16 needs --full-ranges");
    r = scan_extension_converse(max, c.threads);
  }
  print_scan(c, r, out);
  return r.ok() ? kOk : kCounterexample;
}

int run_superpoly(const Common& c, const std::string& what, std::uint32_t n, std::uint32_t b, std::uint32_t d,
                  std::ostream& out) {
  if (what == "lemma") {
    const LemmaSeed l = lemma_seed(n, b);
    const auto r = find_periodicity(l.moves, l.seed, options(c));
    const bool ok = r.period == l.period && r.preperiod == 0;
    if (c.format == Format::kJson) {
      out << json{{"moves", l.moves.moves()}, {"seed", l.seed.to_string()}, {"predicted_period", l.period},
                  {"period", r.period},       {"preperiod", r.preperiod},   {"agrees", ok}}
                 .dump(2)
          << '\n';
    } else {
      out << l.moves.to_string() << " seed " << l.seed.to_string() << ": predicted " << l.period << ", engine N="
          << r.preperiod << " p=" << r.period << (ok ? "  agree" : "  DISAGREE") << '\n';
    }
    return ok ? kOk : kCounterexample;
  }
  if (what == "grid") {
    const GridFilling g(n, d);
    const auto bad = validate_grid(g);
    const bool engine = grid_matches_engine(g);
    if (c.format == Format::kJson) {
      json rows = json::array();
      for (std::uint32_t i = 0; i < g.rows(); ++i) rows.push_back(g.row(i).to_string());
      json v = json::array();
      for (const auto& x : bad) v.push_back({{"i", x.i}, {"j", x.j}, {"case", x.case_id}, {"what", x.what}});
      out << json{{"n", n},       {"d", d},         {"b", g.b()},
                  {"rows", rows}, {"violations", v}, {"matches_engine", engine}}
                 .dump(2)
          << '\n';
    } else {
      out << "b=" << g.b() << " columns " << g.first_column() << ".." << g.beta() << '\n';
      for (std::uint32_t i = 0; i < g.rows(); ++i) {
        out << "  " << std::string(static_cast<std::size_t>(g.last_column(0) - g.last_column(i)), ' ')
            << g.row(i).to_string() << '\n';
      }
      out << bad.size() << " violations; engine " << (engine ? "agrees" : "DISAGREES") << '\n';
      for (const auto& x : bad) out << "  (" << x.i << ',' << x.j << ") case " << x.case_id << ": " << x.what << '\n';
    }
    return bad.empty() && engine ? kOk : kCounterexample;
  }
  if (what == "family") {
    const auto v = verify_family(n, c.budget);
    const auto& inst = v.instance;
    if (c.format == Format::kJson) {
      out << json{{"n", n},
                  {"moves", inst.moves.moves()},
                  {"seed", inst.seed.to_string()},
                  {"component_periods", inst.component_periods},
                  {"observed_component_periods", v.observed_component_periods},
                  {"component_lcm", inst.component_lcm},
                  {"divisor", inst.divisor},
                  {"verdict", to_string(v.verdict)},
                  {"period", v.period},
                  {"steps", v.steps}}
                 .dump(2)
          << '\n';
    } else {
      out << "moves     " << inst.moves.to_string() << '\n'
          << "seed      " << inst.seed.to_string() << '\n'
          << "components";
      for (auto p : v.observed_component_periods) out << ' ' << p;
      out << '\n' << "lcm       " << inst.component_lcm << " (divides the period, which divides " << inst.divisor
          << ")\n"
          << "verdict   " << to_string(v.verdict) << '\n';
      if (v.verdict == FamilyVerdict::kExact) out << "period    " << v.period << '\n';
      if (v.verdict == FamilyVerdict::kBudgetExceeded) out << "raise --budget for an exact period\n";
    }
    return v.verdict == FamilyVerdict::kBudgetExceeded || !v.components_confirmed ? kCounterexample : kOk;
  }
  const std::uint32_t max_b = b ? b : (c.full_ranges ? 26 : 20);
  out << "b,period_count,alpha,log10_lcm,log10_lemma_lcm\n";
  for (const auto& r : lcm_heuristic(max_b)) {
    out << r.b << ',' << r.period_count << ',' << r.alpha << ',' << r.log10_lcm << ',' << r.log10_lemma_lcm << '\n';
  }
  return kOk;
}

int run_oeis(const Common& c, std::ostream& out) {
  const OeisClient client = make_oeis_client(c);
  const auto reports = run_oeis_checks(client);
  bool ok = true;
  json rows = json::array();
  for (const auto& r : reports) {
    ok = ok && r.match;
    if (c.format == Format::kJson) {
      json j{{"id", r.id}, {"source", r.source}, {"match", r.match}, {"compared", r.compared}};
      if (r.first_mismatch) j["first_mismatch"] = {{"n", *r.first_mismatch}, {"expected", r.expected}, {"got", r.got}};
      rows.push_back(j);
    } else {
      out << r.id << ' ' << (r.match ? "match" : "MISMATCH") << ", " << r.compared << " terms from " << r.source;
      if (r.first_mismatch) out << "; n=" << *r.first_mismatch << " expected " << r.expected << " got " << r.got;
      out << '\n';
    }
  }
  if (c.format == Format::kJson) out << rows.dump(2) << '\n';
  return ok ? kOk : kCounterexample;
}

}  // namespace cli
