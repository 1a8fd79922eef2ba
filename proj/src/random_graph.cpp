#include "mcover/random_graph.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mcover {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

Graph random_connected_gnp(Vertex n, double p, Rng& rng, int max_attempts) {
  if (n < 2) throw PreconditionError("random graphs need n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in (0, 1]");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(p)) edges.push_back({u, v});
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw PreconditionError("no connected G(n, p) sample within the attempt limit");
}

Graph random_connected_gnm(Vertex n, std::size_t m, Rng& rng) {
  if (n < 2) throw PreconditionError("random graphs need n >= 2");
  const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (m < static_cast<std::size_t>(n - 1))
    throw PreconditionError("m < n - 1: no connected graph has that few edges");
  if (m > max_edges) throw PreconditionError("m exceeds n(n-1)/2");

  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (Vertex i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

  std::unordered_set<std::uint64_t> present;
  std::vector<Edge> edges;
  edges.reserve(m);
  auto key = [n](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v;
  };
  auto add = [&](Vertex u, Vertex v) {
    if (!present.insert(key(u, v)).second) return false;
    edges.push_back({std::min(u, v), std::max(u, v)});
    return true;
  };
  for (Vertex i = 1; i < n; ++i) add(order[i], order[rng.below(i)]);

  if (m * 2 > max_edges) {
    // Dense: pick the extra edges from an explicit list of absent pairs.
    std::vector<Edge> absent;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!present.count(key(u, v))) absent.push_back({u, v});
    for (std::size_t i = 0; edges.size() < m; ++i) {
      const std::size_t j = i + rng.below(absent.size() - i);
      std::swap(absent[i], absent[j]);
      add(absent[i].u, absent[i].v);
    }
  } else {
    while (edges.size() < m) {
      const Vertex u = static_cast<Vertex>(rng.below(n));
      const Vertex v = static_cast<Vertex>(rng.below(n));
      if (u != v) add(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace mcover
