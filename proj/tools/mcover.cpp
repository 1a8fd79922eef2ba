#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcover/commands.hpp"

int main(int argc, char** argv) {
  using namespace mcover::cli;
  CLI::App app{"Optimal matching covers of simple graphs"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Compute mc(G) and an optimal matching cover");
  solve->add_option("file", solve_opts.path, "Graph file ('-' for stdin)")->required();
  solve->add_flag("--json", solve_opts.json, "Emit the run report and cover as JSON");
  solve->add_flag("--verify", solve_opts.verify, "Check the cover before printing it");
  solve->add_flag("--trace", solve_opts.trace, "Log every switching-path transform to stderr");
  solve->add_flag("--timing", solve_opts.timing, "Report wall time (makes output run-dependent)");

  OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Cross-check the solver against brute force");
  oracle->add_option("file", oracle_opts.path, "Graph file ('-' for stdin)")->required();
  oracle->add_option("--max-n", oracle_opts.max_n, "Largest vertex count to attempt")
      ->capture_default_str();
  oracle->add_option("--max-m", oracle_opts.max_m, "Largest edge count to attempt")
      ->capture_default_str();

  RandomOptions random_opts;
  double p = 0.0;
  std::size_t m = 0;
  auto* random = app.add_subcommand("random", "Generate connected random graphs");
  random->add_option("--n", random_opts.n, "Vertex count")->required()->check(CLI::Range(2, 1 << 30));
  auto* p_opt = random->add_option("--p", p, "Edge probability, rejection-sampled until connected");
  auto* m_opt = random->add_option("--m", m, "Exact edge count (spanning tree plus uniform extras)");
  p_opt->excludes(m_opt);
  random->add_option("--seed", random_opts.seed, "64-bit seed")->required();
  random->add_option("--count", random_opts.count, "Number of graphs")->capture_default_str();
  random->add_option("--out", random_opts.out_dir, "Write one file per graph into this directory");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time the solver on random graphs with m = ratio * n");
  bench->add_option("--sizes", bench_opts.sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--seed", bench_opts.seed, "64-bit seed")->required();
  bench->add_option("--ratio", bench_opts.edge_ratio, "Edges per vertex")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*solve) return cmd_solve(solve_opts, std::cout, std::cerr);
  if (*oracle) return cmd_oracle(oracle_opts, std::cout, std::cerr);
  if (*random) {
    if (*p_opt) random_opts.p = p;
    if (*m_opt) random_opts.m = m;
    return cmd_random(random_opts, std::cout, std::cerr);
  }
  if (*bench) return cmd_bench(bench_opts, std::cout, std::cerr);
  return kExitInput;
}
