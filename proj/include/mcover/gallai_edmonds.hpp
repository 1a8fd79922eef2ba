#pragma once

#include <vector>

#include "mcover/graph.hpp"
#include "mcover/matching.hpp"

namespace mcover {

/// Gallai–Edmonds partition of V(G) together with the maximum matching
/// whose final search forest produced it.
struct GallaiEdmonds {
  VertexSet d;  // missed by some maximum matching
  VertexSet a;  // N(D)
  VertexSet c;  // the rest
  Matching max_matching;
  std::vector<VertexSet> d_components;  // components of G[D], by smallest member
  VertexSet d_star;                     // isolated vertices of G[D]
};

/// Reads D/A/C off the labels of a completed blossom-forest search started
/// from `m`. Throws PreconditionError if `m` is not maximum.
GallaiEdmonds decompose(const Graph& g, const Matching& m);

/// Convenience: maximum matching plus decomposition in one engine run.
GallaiEdmonds decompose(const Graph& g);

/// Builds the decomposition from an explicit D set (used by the engine path
/// and by tests that construct decompositions by hand).
GallaiEdmonds decomposition_from_d(const Graph& g, VertexSet d, Matching m);

/// Independent check: v ∈ D ⇔ ν(g − v) = ν(g), A = N(D), C = complement.
/// Each ν is a separate matching run.
bool verify_decomposition(const Graph& g, const GallaiEdmonds& ge);

/// Connected, and h − v has a perfect matching for every vertex v.
bool is_factor_critical(const Graph& h);

}  // namespace mcover
