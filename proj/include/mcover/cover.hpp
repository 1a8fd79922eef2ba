#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "mcover/dstar_cover.hpp"
#include "mcover/gallai_edmonds.hpp"
#include "mcover/graph.hpp"
#include "mcover/matching.hpp"

namespace mcover {

/// Ordered matchings M1..Mk whose union covers V(G).
struct MatchingCover {
  std::vector<Matching> matchings;

  std::size_t size() const { return matchings.size(); }
};

/// Which route the solver took.
enum class CoverBranch {
  Perfect,         // A = D = ∅: one perfect matching
  FactorCritical,  // A = ∅, D ≠ ∅: near-perfect matching plus one edge
  GStar,           // A ≠ ∅: star-cover optimization on G*
  Disconnected,    // solved per component and merged level by level
};

std::string_view branch_name(CoverBranch b);

struct SolveResult {
  MatchingCover cover;
  CoverBranch branch = CoverBranch::Perfect;
  int md = 0;               // md(G*), max over components; 0 if G* never built
  int transforms = 0;       // switching-path transforms, summed over components
  int gstar_vertices = 0;   // |V(G*)|, summed over components
};

using TraceFn = std::function<void(const TransformEvent&)>;

/// Optimal matching cover of g. Throws NoCoverError when some vertex has no
/// incident edge (including n < 2) and InvariantError on internal failure.
SolveResult solve(const Graph& g, const TraceFn& trace = {});

/// solve(g).cover
MatchingCover matching_cover(const Graph& g);

/// Turns an optimal star cover of G* into an optimal matching cover of a
/// connected g with A(G) ≠ ∅. Produces max(2, Δ(M_c)) matchings.
MatchingCover assemble(const Graph& g, const GallaiEdmonds& ge, const GStar& gs,
                       const StarCover& sc_final);

/// Every entry is a matching of g and together they cover V(g).
bool verify_cover(const Graph& g, const MatchingCover& mc);

}  // namespace mcover
