#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Eventual periodicity of seeded subtraction games"};
  app.require_subcommand(1);

  cli::Common common;
  std::string format = "text";
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", common.budget, "Step budget for long walks");
    sub->add_flag("--full-ranges", common.full_ranges, "Use the full ranges instead of the quick defaults");
  };

  std::string moves, seed;
  std::optional<std::uint64_t> horizon;
  auto* analyze = app.add_subcommand("analyze", "Preperiod, period and pattern of one game");
  analyze->add_option("-A,--moves", moves, "Move set, e.g. 2,4,7")->required();
  analyze->add_option("-S,--seed", seed, "Seed bits, a pattern, or misere/greedy");
  analyze->add_option("--horizon", horizon, "Also print the first N bits");
  add_common(analyze);

  auto* seeds = app.add_subcommand("seeds", "Every seed of a move set");
  seeds->add_option("-A,--moves", moves, "Move set")->required();
  add_common(seeds);

  std::string family, params;
  std::optional<std::uint32_t> sweep;
  auto* theorem = app.add_subcommand("theorem", "Closed form for a solved family, checked against the engine");
  theorem->add_option("family", family, "single, pair, 1bc, ab-apb, 2s or k")
      ->required()
      ->check(CLI::IsMember({"single", "pair", "1bc", "ab-apb", "2s", "k"}));
  theorem->add_option("params", params, "Comma-separated parameters, e.g. 6,21 for 1bc");
  theorem->add_option("--sweep", sweep, "Check every member up to this bound instead");
  theorem->add_option("-S,--seed", seed, "Seed for the single family");
  add_common(theorem);

  std::string target, seed_policy = "none";
  std::uint32_t max = 0;
  std::uint64_t sample = 64, rng_seed = 0x5eed;
  auto* scan = app.add_subcommand("scan", "Search for counterexamples to an open claim");
  scan->add_option("target", target, "linear, quadratic, abc, converse or exceptions")
      ->required()
      ->check(CLI::IsMember({"linear", "quadratic", "abc", "converse", "exceptions"}));
  scan->add_option("--max", max, "Largest move (largest alpha for converse)")->required();
  scan->add_option("--seeds", seed_policy, "none, all or sampled")
      ->check(CLI::IsMember({"none", "all", "sampled"}));
  scan->add_option("--sample", sample, "Seeds per set when sampling");
  scan->add_option("--rng-seed", rng_seed, "Sampling seed");
  add_common(scan);

  std::string what;
  std::uint32_t n = 1, b = 0, d = 0;
  auto* superpoly = app.add_subcommand("superpoly", "Purely periodic seeds and the superpolynomial family");
  superpoly->add_option("what", what, "lemma, grid, family or lcm")
      ->required()
      ->check(CLI::IsMember({"lemma", "grid", "family", "lcm"}));
  superpoly->add_option("-n", n, "Family index");
  superpoly->add_option("-b", b, "Middle move (lemma) or largest b (lcm)");
  superpoly->add_option("-d", d, "Grid extension");
  add_common(superpoly);

  std::string cache;
  auto* oeis = app.add_subcommand("oeis", "Compare counts against OEIS b-files");
  oeis->add_option("--oeis-cache", cache, "Cache directory for fetched b-files");
  oeis->add_flag("--live", common.live, "Fetch from oeis.org before falling back to cache and snapshots");
  add_common(oeis);

  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "CSV rows behind a figure");
  figure->add_option("id", figure_id, "2, 3, 5, 6, 7 or 8")->required()->check(CLI::IsMember({2, 3, 5, 6, 7, 8}));
  figure->add_option("-A,--moves", moves, "Restrict figure 7 to one {1,b,b+1}");
  add_common(figure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    common.format = cli::parse_format(format);
    if (!cache.empty()) common.oeis_cache = cache;
    std::ostream& out = std::cout;
    if (*analyze) return cli::run_analyze(common, moves, seed, horizon, out);
    if (*seeds) return cli::run_seeds(common, moves, out);
    if (*theorem) return cli::run_theorem(common, family, params, seed, sweep, out);
    if (*scan) return cli::run_scan(common, target, max, seed_policy, sample, rng_seed, out);
    if (*superpoly) return cli::run_superpoly(common, what, n, b, d, out);
    if (*oeis) return cli::run_oeis(common, out);
    if (*figure) return cli::run_figure(common, figure_id, moves, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  return cli::kUsage;
}
