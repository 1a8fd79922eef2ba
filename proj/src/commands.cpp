#include "mcover/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "mcover/oracle.hpp"
#include "mcover/random_graph.hpp"

namespace mcover::cli {
namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string instance_name(const std::string& path) {
  return path == "-" ? "stdin" : std::filesystem::path(path).filename().string();
}

// Loads a graph, reporting failures on `err`. Returns nullopt with the exit
// code stored in `code` on failure.
std::optional<Graph> load(const std::string& path, std::ostream& err, int& code) {
  try {
    return parse_graph(read_input(path));
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  code = kExitInput;
  return std::nullopt;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

std::string format_matching(const Matching& m) {
  std::string line;
  for (const Edge& e : m.edges()) {
    if (!line.empty()) line += ' ';
    line += std::to_string(e.u + 1) + '-' + std::to_string(e.v + 1);
  }
  return line;
}

nlohmann::ordered_json report_json(const RunReport& report, const MatchingCover& cover,
                                   bool with_timing) {
  nlohmann::ordered_json j;
  j["schema"] = kJsonSchema;
  j["instance"] = report.instance;
  j["n"] = report.n;
  j["m"] = report.m;
  j["mc"] = report.mc;
  j["branch"] = std::string(branch_name(report.branch));
  j["md"] = report.md;
  j["transforms"] = report.transforms;
  j["gstar_vertices"] = report.gstar_vertices;
  if (with_timing) j["wall_ms"] = report.wall_ms;
  auto& levels = j["matchings"] = nlohmann::ordered_json::array();
  for (const Matching& m : cover.matchings) {
    auto level = nlohmann::ordered_json::array();
    for (const Edge& e : m.edges()) level.push_back({e.u + 1, e.v + 1});
    levels.push_back(std::move(level));
  }
  return j;
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  auto g = load(opts.path, err, code);
  if (!g) return code;

  TraceFn trace;
  if (opts.trace) {
    trace = [&err](const TransformEvent& e) {
      err << "transform origin=" << e.origin + 1 << " terminus=" << e.terminus + 1
          << " length=" << e.path_length << " delta=" << e.max_degree << '\n';
    };
  }

  RunReport report;
  report.instance = instance_name(opts.path);
  report.n = g->num_vertices();
  report.m = g->num_edges();
  SolveResult result;
  try {
    const auto start = std::chrono::steady_clock::now();
    result = solve(*g, trace);
    report.wall_ms = elapsed_ms(start);
  } catch (const NoCoverError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoCover;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  report.mc = result.cover.size();
  report.branch = result.branch;
  report.md = result.md;
  report.transforms = result.transforms;
  report.gstar_vertices = result.gstar_vertices;

  if (opts.verify && !verify_cover(*g, result.cover)) {
    err << "internal error: --verify rejected the computed cover\n";
    return kExitInternal;
  }

  if (opts.json) {
    out << report_json(report, result.cover, opts.timing).dump() << '\n';
  } else {
    out << "mc = " << report.mc << '\n';
    for (const Matching& m : result.cover.matchings) out << format_matching(m) << '\n';
    if (opts.timing) err << "wall_ms = " << report.wall_ms << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  auto g = load(opts.path, err, code);
  if (!g) return code;
  oracle::OracleBudget budget;
  budget.max_vertices = opts.max_n;
  budget.max_edges = opts.max_m;
  try {
    const std::size_t pipeline = solve(*g).cover.size();
    const int brute = oracle::brute_mc(*g, budget);
    const bool agree = pipeline == static_cast<std::size_t>(brute);
    out << "pipeline=" << pipeline << " oracle=" << brute << (agree ? " OK" : " MISMATCH") << '\n';
    return agree ? kExitOk : kExitInternal;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const NoCoverError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoCover;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.p.has_value() == opts.m.has_value()) {
    err << "error: give exactly one of --p and --m\n";
    return kExitInput;
  }
  if (opts.count < 0) {
    err << "error: --count must be non-negative\n";
    return kExitInput;
  }
  Rng rng(opts.seed);
  try {
    for (int i = 0; i < opts.count; ++i) {
      const Graph g = opts.p ? random_connected_gnp(opts.n, *opts.p, rng)
                             : random_connected_gnm(opts.n, *opts.m, rng);
      std::ostringstream text;
      text << "c random n=" << opts.n;
      if (opts.p) text << " p=" << *opts.p;
      else text << " m=" << *opts.m;
      text << " seed=" << opts.seed << " index=" << i << '\n' << serialize_graph(g) << '\n';
      if (opts.out_dir.empty()) {
        if (i > 0) out << '\n';
        out << text.str();
      } else {
        std::filesystem::create_directories(opts.out_dir);
        const auto file = std::filesystem::path(opts.out_dir) /
                          ("random_n" + std::to_string(opts.n) + "_s" + std::to_string(opts.seed) +
                           "_" + std::to_string(i) + ".gr");
        std::ofstream f(file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + file.string() + "'");
        f << text.str();
      }
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  out << "n,m,mc,md,transforms,gstar_vertices,wall_ms\n";
  for (Vertex n : opts.sizes) {
    if (n < 2) {
      err << "error: bench sizes must be at least 2\n";
      return kExitInput;
    }
    const std::size_t max_m = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t m = static_cast<std::size_t>(std::llround(opts.edge_ratio * n));
    m = std::clamp<std::size_t>(m, n - 1, max_m);
    Rng rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
    const Graph g = random_connected_gnm(n, m, rng);
    try {
      const auto start = std::chrono::steady_clock::now();
      const SolveResult r = solve(g);
      const double ms = elapsed_ms(start);
      out << n << ',' << m << ',' << r.cover.size() << ',' << r.md << ',' << r.transforms << ','
          << r.gstar_vertices << ',' << ms << '\n';
    } catch (const InvariantError& e) {
      err << "internal error: " << e.what() << '\n';
      return kExitInternal;
    }
  }
  return kExitOk;
}

}  // namespace mcover::cli
