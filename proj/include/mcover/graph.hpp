#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcover/errors.hpp"

namespace mcover {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph over vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; every adjacency list is
/// sorted ascending. Connectivity is not required.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, rejecting self-loops, duplicates and out-of-range ends.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }
  std::size_t max_degree() const;

  bool has_edge(Vertex u, Vertex v) const;
  /// Id of edge {u, v}, or -1 when absent.
  EdgeId edge_id(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency; adj_ids_ parallels adj_ with the edge id of each entry.
  std::vector<std::size_t> offset_{0};
  std::vector<Vertex> adj_;
  std::vector<EdgeId> adj_ids_;
};

/// Membership bitmap over the vertices of a host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Vertex n) : bits_(n, 0) {}
  VertexSet(Vertex n, std::span<const Vertex> members);

  Vertex universe() const noexcept { return static_cast<Vertex>(bits_.size()); }
  bool contains(Vertex v) const { return bits_[v] != 0; }
  void insert(Vertex v) { bits_[v] = 1; }
  void erase(Vertex v) { bits_[v] = 0; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<char> bits_;
};

/// Set of edge ids into a host graph, kept sorted and unique.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(const Graph& g, std::vector<EdgeId> ids);

  std::span<const EdgeId> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool contains(EdgeId id) const;
  /// V(M): vertices touched by at least one edge.
  VertexSet covered_vertices(const Graph& g) const;

 private:
  std::vector<EdgeId> ids_;
};

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;    // local -> host
  std::vector<Vertex> from_host;  // host -> local, kNoVertex if dropped
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
/// Same as induced_subgraph on the complement of `removed`.
Subgraph remove_vertices(const Graph& g, const VertexSet& removed);

/// N_G(S): vertices outside s with a neighbor in s.
VertexSet neighbor_set(const Graph& g, const VertexSet& s);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Component index per vertex, numbered as in components().
std::vector<int> component_labels(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

/// Parses the `p n m` / `e u v` edge-list format (1-indexed in text).
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace mcover
