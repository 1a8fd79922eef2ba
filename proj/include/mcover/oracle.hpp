#pragma once

#include <chrono>

#include "mcover/dstar_cover.hpp"
#include "mcover/graph.hpp"

namespace mcover::oracle {

/// Instances larger than this are refused with BudgetExceeded.
struct OracleBudget {
  int max_vertices = 12;
  int max_edges = 24;
  std::chrono::milliseconds timeout{30'000};
};

/// ν(g) by memoized backtracking over vertex subsets.
int brute_nu(const Graph& g, const OracleBudget& budget = {});

/// mc(g) as the least k such that V(g) splits into vertex-disjoint stars
/// with at most k edges each. NoCoverError if some vertex has no edge.
int brute_mc(const Graph& g, const OracleBudget& budget = {});

/// md(G*): least k such that every D-vertex can be assigned to an
/// A-neighbor with no A-vertex taking more than k. 0 when D* is empty.
int brute_md(const GStar& gs, const OracleBudget& budget = {});

/// {v : ν(g − v) = ν(g)}
VertexSet brute_d_set(const Graph& g, const OracleBudget& budget = {});

}  // namespace mcover::oracle
