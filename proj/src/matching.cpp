#include "mcover/matching.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace mcover {

Matching Matching::from_edges(const Graph& g, std::span<const Edge> edges) {
  Matching m(g.num_vertices());
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("matching edge not in graph");
    if (m.is_matched(e.u) || m.is_matched(e.v))
      throw PreconditionError("edges share a vertex");
    m.match(e.u, e.v);
  }
  return m;
}

std::size_t Matching::size() const {
  std::size_t count = 0;
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (mate_[v] > v) ++count;
  return count;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (mate_[v] > v) out.push_back({v, mate_[v]});
  return out;
}

VertexSet Matching::covered_vertices() const {
  VertexSet out(num_vertices());
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (is_matched(v)) out.insert(v);
  return out;
}

bool Matching::is_valid_on(const Graph& g) const {
  if (num_vertices() != g.num_vertices()) return false;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    Vertex w = mate_[v];
    if (w == kNoVertex) continue;
    if (w < 0 || w >= num_vertices() || w == v || mate_[w] != v) return false;
    if (!g.has_edge(v, w)) return false;
  }
  return true;
}

void Matching::match(Vertex u, Vertex v) {
  mate_[u] = v;
  mate_[v] = u;
}

void Matching::unmatch(Vertex u) {
  Vertex v = mate_[u];
  if (v == kNoVertex) return;
  mate_[u] = kNoVertex;
  mate_[v] = kNoVertex;
}

namespace {

// Alternating forest grown simultaneously from every exposed vertex.
//
// Blossoms are contracted implicitly: a union-find over vertices tracks the
// current base of each contracted blossom, and `parent_` links are rewritten
// along the blossom cycle so that following mate/parent from any even vertex
// walks a valid alternating path to its tree root.
class ForestSearch {
 public:
  ForestSearch(const Graph& g, std::vector<Vertex>& mate)
      : g_(g),
        mate_(mate),
        label_(g.num_vertices()),
        parent_(g.num_vertices()),
        root_(g.num_vertices()),
        uf_(g.num_vertices()),
        base_(g.num_vertices()),
        stamp_(g.num_vertices(), 0),
        retired_(g.num_vertices(), 0) {}

  // Grows the forest until two trees touch. Returns the bridging edge
  // (even v in one tree, even u in another), or nullopt when the forest is
  // complete and the matching is maximum.
  std::optional<std::pair<Vertex, Vertex>> search() {
    reset();
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex u : g_.neighbors(v)) {
        if (find(u) == find(v) || label_[u] == ForestLabel::Odd) continue;
        if (label_[u] == ForestLabel::Unreached) {
          // Every exposed vertex is a root, so u is matched.
          label_[u] = ForestLabel::Odd;
          parent_[u] = v;
          root_[u] = root_[v];
          const Vertex w = mate_[u];
          label_[w] = ForestLabel::Even;
          root_[w] = root_[v];
          queue_.push_back(w);
        } else if (root_[u] != root_[v]) {
          return std::make_pair(v, u);
        } else {
          shrink(v, u);
        }
      }
    }
    return std::nullopt;
  }

  // One phase: grows the forest and augments along every bridge whose two
  // trees are still untouched, then retires both trees for the rest of the
  // phase. Returns the number of augmentations.
  int augment_phase() {
    reset();
    std::fill(retired_.begin(), retired_.end(), 0);
    int found = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      if (retired_[root_[v]]) continue;
      for (Vertex u : g_.neighbors(v)) {
        if (retired_[root_[v]]) break;
        if (label_[u] != ForestLabel::Unreached && retired_[root_[u]]) continue;
        if (find(u) == find(v) || label_[u] == ForestLabel::Odd) continue;
        if (label_[u] == ForestLabel::Unreached) {
          label_[u] = ForestLabel::Odd;
          parent_[u] = v;
          root_[u] = root_[v];
          const Vertex w = mate_[u];
          label_[w] = ForestLabel::Even;
          root_[w] = root_[v];
          queue_.push_back(w);
        } else if (root_[u] != root_[v]) {
          retired_[root_[v]] = retired_[root_[u]] = 1;
          flip_to_root(v);
          flip_to_root(u);
          mate_[v] = u;
          mate_[u] = v;
          ++found;
        } else {
          shrink(v, u);
        }
      }
    }
    return found;
  }

  // Vertices on the alternating path from even vertex w to its root.
  std::vector<Vertex> path_to_root(Vertex w) const {
    std::vector<Vertex> out{w};
    for (Vertex odd = mate_[w]; odd != kNoVertex;) {
      const Vertex even = parent_[odd];
      out.push_back(odd);
      out.push_back(even);
      odd = mate_[even];
    }
    return out;
  }

  // Flips the path from w to its root, leaving w exposed.
  void flip_to_root(Vertex w) {
    for (Vertex odd = mate_[w]; odd != kNoVertex;) {
      const Vertex even = parent_[odd];
      const Vertex next = mate_[even];
      mate_[odd] = even;
      mate_[even] = odd;
      odd = next;
    }
  }

  const std::vector<ForestLabel>& labels() const { return label_; }

 private:
  void reset() {
    const Vertex n = g_.num_vertices();
    std::fill(label_.begin(), label_.end(), ForestLabel::Unreached);
    std::fill(parent_.begin(), parent_.end(), kNoVertex);
    std::fill(root_.begin(), root_.end(), kNoVertex);
    std::iota(uf_.begin(), uf_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (mate_[v] != kNoVertex) continue;
      label_[v] = ForestLabel::Even;
      root_[v] = v;
      queue_.push_back(v);
    }
  }

  Vertex find_set(Vertex v) {
    while (uf_[v] != v) {
      uf_[v] = uf_[uf_[v]];
      v = uf_[v];
    }
    return v;
  }
  Vertex find(Vertex v) { return base_[find_set(v)]; }

  void unite_into(Vertex v, Vertex base) {
    Vertex a = find_set(v), b = find_set(base);
    if (a == b) return;
    uf_[a] = b;
    base_[b] = base;
  }

  // First common base on the tree paths of two even vertices.
  Vertex lowest_common_base(Vertex a, Vertex b) {
    ++current_stamp_;
    for (;;) {
      if (a != kNoVertex) {
        a = find(a);
        if (stamp_[a] == current_stamp_) return a;
        stamp_[a] = current_stamp_;
        a = mate_[a] == kNoVertex ? kNoVertex : parent_[mate_[a]];
      }
      std::swap(a, b);
    }
  }

  void mark_path(Vertex v, Vertex base, Vertex child, std::vector<Vertex>& touched) {
    while (find(v) != base) {
      const Vertex m = mate_[v];
      touched.push_back(v);
      touched.push_back(m);
      parent_[v] = child;
      child = m;
      v = parent_[m];
    }
  }

  void shrink(Vertex v, Vertex u) {
    const Vertex base = lowest_common_base(v, u);
    touched_.clear();
    mark_path(v, base, u, touched_);
    mark_path(u, base, v, touched_);
    for (Vertex t : touched_) {
      if (label_[t] == ForestLabel::Odd) {
        label_[t] = ForestLabel::Even;
        queue_.push_back(t);
      }
    }
    for (Vertex t : touched_) unite_into(t, base);
  }

  const Graph& g_;
  std::vector<Vertex>& mate_;
  std::vector<ForestLabel> label_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> root_;
  std::vector<Vertex> uf_;
  std::vector<Vertex> base_;
  std::vector<unsigned> stamp_;
  unsigned current_stamp_ = 0;
  std::vector<Vertex> queue_;
  std::vector<Vertex> touched_;
  std::vector<char> retired_;  // indexed by root
};

std::vector<Vertex> mates_of(const Matching& m) {
  auto span = m.mates();
  return {span.begin(), span.end()};
}

Matching from_mates(const std::vector<Vertex>& mate) {
  Matching m(static_cast<Vertex>(mate.size()));
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
    if (mate[v] > v) m.match(v, mate[v]);
  return m;
}

void require_valid(const Graph& g, const Matching& m) {
  if (!m.is_valid_on(g)) throw PreconditionError("matching is not valid on the graph");
}

// Adds edges between exposed vertices, lowest ids first. Never uncovers a
// vertex, so it is a safe warm start before the augmenting phases.
void extend_greedily(const Graph& g, std::vector<Vertex>& mate) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] != kNoVertex) continue;
    for (Vertex w : g.neighbors(v)) {
      if (mate[w] == kNoVertex) {
        mate[v] = w;
        mate[w] = v;
        break;
      }
    }
  }
}

}  // namespace

Matching greedy_matching(const Graph& g) {
  std::vector<Vertex> mate(g.num_vertices(), kNoVertex);
  extend_greedily(g, mate);
  return from_mates(mate);
}

MatchingWithLabels maximum_matching_with_labels(const Graph& g, const Matching& start) {
  require_valid(g, start);
  std::vector<Vertex> mate = mates_of(start);
  extend_greedily(g, mate);
  ForestSearch search(g, mate);
  while (search.augment_phase() > 0) continue;
  return {from_mates(mate), search.labels()};
}

MatchingWithLabels maximum_matching_with_labels(const Graph& g) {
  return maximum_matching_with_labels(g, Matching(g.num_vertices()));
}

Matching maximum_matching(const Graph& g) {
  return maximum_matching_with_labels(g).matching;
}

Matching maximum_matching_covering(const Graph& g, const Matching& m0) {
  return maximum_matching_with_labels(g, m0).matching;
}

std::optional<AugmentingPath> augment(const Graph& g, const Matching& m) {
  require_valid(g, m);
  std::vector<Vertex> mate = mates_of(m);
  ForestSearch search(g, mate);
  auto bridge = search.search();
  if (!bridge) return std::nullopt;
  auto left = search.path_to_root(bridge->first);
  auto right = search.path_to_root(bridge->second);
  AugmentingPath path;
  path.vertices.assign(left.rbegin(), left.rend());
  path.vertices.insert(path.vertices.end(), right.begin(), right.end());
  return path;
}

Matching apply_augmenting_path(const Graph& g, const Matching& m, const AugmentingPath& path) {
  require_valid(g, m);
  const auto& p = path.vertices;
  if (p.size() < 2 || p.size() % 2 != 0)
    throw PreconditionError("augmenting path must have an odd number of edges");
  if (m.is_matched(p.front()) || m.is_matched(p.back()))
    throw PreconditionError("augmenting path ends must be exposed");
  std::vector<char> seen(g.num_vertices(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.num_vertices() || seen[p[i]])
      throw PreconditionError("augmenting path is not a simple path");
    seen[p[i]] = 1;
    if (i + 1 == p.size()) break;
    if (!g.has_edge(p[i], p[i + 1])) throw PreconditionError("augmenting path leaves the graph");
    const bool should_be_matched = (i % 2 == 1);
    if ((m.mate(p[i]) == p[i + 1]) != should_be_matched)
      throw PreconditionError("augmenting path does not alternate");
  }
  Matching out = m;
  for (std::size_t i = 0; i + 1 < p.size(); i += 2) out.match(p[i], p[i + 1]);
  return out;
}

}  // namespace mcover
