#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mcover/gallai_edmonds.hpp"
#include "mcover/graph.hpp"
#include "mcover/matching.hpp"

namespace mcover {

// A-vertices and D-vertices of G* are indexed separately, in ascending
// order of their host ids, so comparing local indices compares host ids.
using AVertex = int;
using DVertex = int;

/// Bipartite graph between A(G) and D* (the isolated vertices of G[D]).
struct GStar {
  Vertex host_vertices = 0;
  std::vector<Vertex> a_host;  // AVertex -> host id
  std::vector<Vertex> d_host;  // DVertex -> host id
  std::vector<AVertex> a_of_host;  // host id -> AVertex or -1
  std::vector<DVertex> d_of_host;  // host id -> DVertex or -1
  std::vector<std::vector<DVertex>> a_adj;  // sorted
  std::vector<std::vector<AVertex>> d_adj;  // sorted
  std::size_t num_edges = 0;

  int num_a() const { return static_cast<int>(a_host.size()); }
  int num_d() const { return static_cast<int>(d_host.size()); }
  int num_vertices() const { return num_a() + num_d(); }
  bool has_edge(AVertex a, DVertex d) const;

  /// Standalone G* for tests and the oracle: host ids are A then D.
  static GStar from_bipartite(int num_a, int num_d, const std::vector<std::pair<AVertex, DVertex>>& edges);
};

/// Keeps A–D* host edges; drops C, non-trivial D components and A–A edges.
/// Throws PreconditionError when A(G) is empty.
GStar build_gstar(const Graph& g, const GallaiEdmonds& ge);

/// Matching D*-cover held as a star forest: every D-vertex hangs off exactly
/// one A-vertex center. Degrees are the G*[M_c]+A degrees of the centers.
class StarCover {
 public:
  StarCover() = default;
  /// Throws PreconditionError unless every center_of[d] is a G* neighbor of d.
  StarCover(const GStar& gs, std::vector<AVertex> center_of);

  AVertex center_of(DVertex d) const { return center_of_[d]; }
  int effective_degree(AVertex a) const { return degree_[a]; }
  /// Δ(G*[M_c]); 0 when D* is empty.
  int max_degree() const;
  std::vector<AVertex> maximum_centers() const;
  /// Ends of the star at `a`, ascending.
  std::vector<DVertex> leaves(AVertex a) const;
  /// M_c as (center, end) pairs, sorted.
  std::vector<std::pair<AVertex, DVertex>> edges() const;

  int num_a() const { return static_cast<int>(degree_.size()); }
  int num_d() const { return static_cast<int>(center_of_.size()); }

  friend bool operator==(const StarCover&, const StarCover&) = default;

 private:
  std::vector<AVertex> center_of_;
  std::vector<int> degree_;
};

int effective_degree(const StarCover& sc, AVertex a);

/// Union of M_c-alternating trees rooted at maximum centers, grown one after
/// another so that tree i is maximal in G* minus trees 0..i-1.
struct AlternatingForest {
  std::vector<AVertex> roots;
  std::vector<int> a_tree;          // tree index per A-vertex, -1 outside F
  std::vector<int> d_tree;          // tree index per D-vertex, -1 outside F
  std::vector<DVertex> attached_by; // non-M_c edge that attached each non-root A_F vertex
  std::vector<AVertex> a_members;   // A_F in attachment order

  bool contains(AVertex a) const { return a_tree[a] >= 0; }
};

/// u = u1, y1, u2, ..., yk, u_{k+1} = v with u_i y_i ∈ M_c and y_i u_{i+1} ∉ M_c.
struct SwitchingPath {
  std::vector<AVertex> centers;  // u1..u_{k+1}
  std::vector<DVertex> ends;     // y1..yk

  AVertex origin() const { return centers.front(); }
  AVertex terminus() const { return centers.back(); }
  std::size_t length() const { return 2 * ends.size(); }
};

/// Cover with M* = M ∩ E(G*) plus, for each D-vertex M* misses, the edge to
/// its lowest A-neighbor.
StarCover initial_cover(const GStar& gs, const Matching& host_matching);

/// Requires Δ ≥ 2 (PreconditionError otherwise).
AlternatingForest build_forest(const GStar& gs, const StarCover& sc);

/// No G* edge joins D_F to an A-vertex outside A_F.
bool forest_is_closed(const GStar& gs, const AlternatingForest& f);

/// Picks v ∈ A_F of least degree (lowest id on ties) and returns the tree
/// path from its root when d(v) ≤ d(root) − 2.
std::optional<SwitchingPath> find_switching_path(const AlternatingForest& f, const StarCover& sc);

/// M_c Δ E(P). Throws PreconditionError on a malformed path.
StarCover transform(const GStar& gs, const StarCover& sc, const SwitchingPath& p);

struct TransformEvent {
  Vertex origin;    // host id
  Vertex terminus;  // host id
  std::size_t path_length;
  int max_degree;   // Δ after the transform
};

struct OptimizeResult {
  StarCover cover;
  int transforms = 0;
};

/// Transforms along switching paths until none exists. Throws
/// InvariantError if more than |V(G*)| transforms are needed or Δ grows.
OptimizeResult optimize(const GStar& gs, StarCover sc0,
                        const std::function<void(const TransformEvent&)>& trace = {});

}  // namespace mcover
