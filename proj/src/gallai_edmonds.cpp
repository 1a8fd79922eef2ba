#include "mcover/gallai_edmonds.hpp"

namespace mcover {

GallaiEdmonds decomposition_from_d(const Graph& g, VertexSet d, Matching m) {
  const Vertex n = g.num_vertices();
  GallaiEdmonds ge;
  ge.a = neighbor_set(g, d);
  ge.c = VertexSet(n);
  for (Vertex v = 0; v < n; ++v)
    if (!d.contains(v) && !ge.a.contains(v)) ge.c.insert(v);

  Subgraph sub = induced_subgraph(g, d);
  for (const VertexSet& local : components(sub.graph)) {
    VertexSet host(n);
    for (Vertex v : local.members()) host.insert(sub.to_host[v]);
    ge.d_components.push_back(std::move(host));
  }
  ge.d_star = VertexSet(n);
  for (Vertex v = 0; v < sub.graph.num_vertices(); ++v)
    if (sub.graph.degree(v) == 0) ge.d_star.insert(sub.to_host[v]);

  ge.d = std::move(d);
  ge.max_matching = std::move(m);
  return ge;
}

GallaiEdmonds decompose(const Graph& g, const Matching& m) {
  if (!m.is_valid_on(g)) throw PreconditionError("matching is not valid on the graph");
  if (augment(g, m)) throw PreconditionError("matching is not maximum: an augmenting path exists");
  // Starting from a maximum matching, the engine performs no augmentation
  // and the labels come from a single complete search.
  MatchingWithLabels run = maximum_matching_with_labels(g, m);
  VertexSet d(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (run.labels[v] == ForestLabel::Even) d.insert(v);
  return decomposition_from_d(g, std::move(d), std::move(run.matching));
}

GallaiEdmonds decompose(const Graph& g) {
  MatchingWithLabels run = maximum_matching_with_labels(g);
  VertexSet d(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (run.labels[v] == ForestLabel::Even) d.insert(v);
  return decomposition_from_d(g, std::move(d), std::move(run.matching));
}

bool verify_decomposition(const Graph& g, const GallaiEdmonds& ge) {
  const Vertex n = g.num_vertices();
  if (ge.d.universe() != n || ge.a.universe() != n || ge.c.universe() != n) return false;
  const std::size_t nu = maximum_matching(g).size();
  for (Vertex v = 0; v < n; ++v) {
    VertexSet removed(n);
    removed.insert(v);
    const std::size_t nu_minus = maximum_matching(remove_vertices(g, removed).graph).size();
    if ((nu_minus == nu) != ge.d.contains(v)) return false;
  }
  if (!(neighbor_set(g, ge.d) == ge.a)) return false;
  for (Vertex v = 0; v < n; ++v) {
    const int memberships = ge.d.contains(v) + ge.a.contains(v) + ge.c.contains(v);
    if (memberships != 1) return false;
  }
  return true;
}

bool is_factor_critical(const Graph& h) {
  if (h.num_vertices() == 0 || !is_connected(h)) return false;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    VertexSet removed(h.num_vertices());
    removed.insert(v);
    if (!maximum_matching(remove_vertices(h, removed).graph).is_perfect()) return false;
  }
  return true;
}

}  // namespace mcover
