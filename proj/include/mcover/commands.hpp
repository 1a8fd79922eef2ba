#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcover/cover.hpp"
#include "mcover/graph.hpp"

namespace mcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;     // unreadable file, parse error, bad parameters
inline constexpr int kExitNoCover = 3;   // n = 1 or an isolated vertex
inline constexpr int kExitInternal = 4;  // invariant breach, failed --verify, oracle mismatch
inline constexpr int kExitBudget = 5;    // instance above the oracle budget

inline constexpr int kJsonSchema = 1;

struct RunReport {
  std::string instance;
  Vertex n = 0;
  std::size_t m = 0;
  std::size_t mc = 0;
  CoverBranch branch = CoverBranch::Perfect;
  int md = 0;
  int transforms = 0;
  int gstar_vertices = 0;
  double wall_ms = 0.0;
};

/// Report plus cover. Edges are 1-indexed `[u, v]` pairs, u < v, sorted.
/// `wall_ms` is emitted only when `with_timing` is set.
nlohmann::ordered_json report_json(const RunReport& report, const MatchingCover& cover,
                                   bool with_timing);

/// One line per matching: `u-v` pairs, 1-indexed, space separated.
std::string format_matching(const Matching& m);

struct SolveOptions {
  std::string path;  // "-" reads stdin
  bool json = false;
  bool verify = false;
  bool trace = false;
  bool timing = false;
};
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);

struct OracleOptions {
  std::string path;
  int max_n = 12;
  int max_m = 24;
};
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);

struct RandomOptions {
  Vertex n = 0;
  std::optional<double> p;
  std::optional<std::size_t> m;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out_dir;  // empty: stream to `out`
};
int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<Vertex> sizes;
  std::uint64_t seed = 0;
  double edge_ratio = 3.0;
};
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace mcover::cli
