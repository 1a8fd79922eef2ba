#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mcover/graph.hpp"

namespace mcover {

/// A set of pairwise vertex-disjoint edges, stored as a mate array.
class Matching {
 public:
  Matching() = default;
  explicit Matching(Vertex n) : mate_(n, kNoVertex) {}

  /// Validates that every edge is in `g` and no vertex repeats.
  static Matching from_edges(const Graph& g, std::span<const Edge> edges);

  Vertex num_vertices() const noexcept { return static_cast<Vertex>(mate_.size()); }
  Vertex mate(Vertex v) const { return mate_[v]; }
  bool is_matched(Vertex v) const { return mate_[v] != kNoVertex; }
  std::size_t size() const;
  bool is_perfect() const { return 2 * size() == mate_.size(); }

  /// Matched pairs (u < v), sorted.
  std::vector<Edge> edges() const;
  VertexSet covered_vertices() const;

  /// Mate symmetry holds and every pair is an edge of `g`.
  bool is_valid_on(const Graph& g) const;

  void match(Vertex u, Vertex v);
  void unmatch(Vertex u);

  std::span<const Vertex> mates() const noexcept { return mate_; }
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
};

/// Alternating path between two exposed vertices, listed end to end.
struct AugmentingPath {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Outcome of the final alternating-forest search of the blossom engine.
enum class ForestLabel : unsigned char { Even, Odd, Unreached };

struct MatchingWithLabels {
  Matching matching;
  /// Labels of the last (failed) search from all exposed vertices: even
  /// vertices form D(G), odd ones A(G), unreached ones C(G).
  std::vector<ForestLabel> labels;
};

/// Maximum-cardinality matching by blossom shrinking. Deterministic.
Matching maximum_matching(const Graph& g);

/// Searches for an m-augmenting path; none iff m is maximum.
std::optional<AugmentingPath> augment(const Graph& g, const Matching& m);

/// m Δ E(path). Throws PreconditionError if `path` is not m-augmenting in g.
Matching apply_augmenting_path(const Graph& g, const Matching& m, const AugmentingPath& path);

/// Maximum matching covering V(m0), grown from m0 by augmentation only.
Matching maximum_matching_covering(const Graph& g, const Matching& m0);

/// Runs the engine from `start` and keeps the final forest labels.
MatchingWithLabels maximum_matching_with_labels(const Graph& g, const Matching& start);
MatchingWithLabels maximum_matching_with_labels(const Graph& g);

/// Lowest-index-first greedy maximal matching.
Matching greedy_matching(const Graph& g);

}  // namespace mcover
