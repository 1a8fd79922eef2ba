#include "mcover/dstar_cover.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace mcover {

bool GStar::has_edge(AVertex a, DVertex d) const {
  const auto& nb = a_adj[a];
  return std::binary_search(nb.begin(), nb.end(), d);
}

GStar GStar::from_bipartite(int num_a, int num_d,
                            const std::vector<std::pair<AVertex, DVertex>>& edges) {
  GStar gs;
  gs.host_vertices = num_a + num_d;
  gs.a_of_host.assign(gs.host_vertices, -1);
  gs.d_of_host.assign(gs.host_vertices, -1);
  for (int a = 0; a < num_a; ++a) {
    gs.a_host.push_back(a);
    gs.a_of_host[a] = a;
  }
  for (int d = 0; d < num_d; ++d) {
    gs.d_host.push_back(num_a + d);
    gs.d_of_host[num_a + d] = d;
  }
  gs.a_adj.assign(num_a, {});
  gs.d_adj.assign(num_d, {});
  for (auto [a, d] : edges) {
    if (a < 0 || a >= num_a || d < 0 || d >= num_d)
      throw PreconditionError("bipartite edge out of range");
    gs.a_adj[a].push_back(d);
    gs.d_adj[d].push_back(a);
  }
  for (auto& nb : gs.a_adj) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw PreconditionError("duplicate bipartite edge");
  }
  for (auto& nb : gs.d_adj) std::sort(nb.begin(), nb.end());
  gs.num_edges = edges.size();
  return gs;
}

GStar build_gstar(const Graph& g, const GallaiEdmonds& ge) {
  if (ge.a.empty()) throw PreconditionError("G* needs a non-empty A(G)");
  const Vertex n = g.num_vertices();
  GStar gs;
  gs.host_vertices = n;
  gs.a_of_host.assign(n, -1);
  gs.d_of_host.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (ge.a.contains(v)) {
      gs.a_of_host[v] = gs.num_a();
      gs.a_host.push_back(v);
    } else if (ge.d_star.contains(v)) {
      gs.d_of_host[v] = gs.num_d();
      gs.d_host.push_back(v);
    }
  }
  gs.a_adj.assign(gs.num_a(), {});
  gs.d_adj.assign(gs.num_d(), {});
  for (DVertex d = 0; d < gs.num_d(); ++d) {
    for (Vertex w : g.neighbors(gs.d_host[d])) {
      const AVertex a = gs.a_of_host[w];
      if (a < 0) continue;
      gs.d_adj[d].push_back(a);
      gs.a_adj[a].push_back(d);
      ++gs.num_edges;
    }
    if (gs.d_adj[d].empty())
      throw PreconditionError("D-vertex " + std::to_string(gs.d_host[d] + 1) +
                              " has no neighbor in A(G)");
  }
  // Host neighbor lists are sorted and D-vertices are visited in order, so
  // every a_adj list is already ascending.
  return gs;
}

StarCover::StarCover(const GStar& gs, std::vector<AVertex> center_of)
    : center_of_(std::move(center_of)), degree_(gs.num_a(), 0) {
  if (static_cast<int>(center_of_.size()) != gs.num_d())
    throw PreconditionError("star cover must assign every D-vertex");
  for (DVertex d = 0; d < gs.num_d(); ++d) {
    const AVertex a = center_of_[d];
    if (a < 0 || a >= gs.num_a() || !gs.has_edge(a, d))
      throw PreconditionError("star cover uses an edge outside G*");
    ++degree_[a];
  }
}

int StarCover::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::vector<AVertex> StarCover::maximum_centers() const {
  std::vector<AVertex> out;
  const int top = max_degree();
  for (AVertex a = 0; a < num_a(); ++a)
    if (degree_[a] == top) out.push_back(a);
  return out;
}

std::vector<DVertex> StarCover::leaves(AVertex a) const {
  std::vector<DVertex> out;
  for (DVertex d = 0; d < num_d(); ++d)
    if (center_of_[d] == a) out.push_back(d);
  return out;
}

std::vector<std::pair<AVertex, DVertex>> StarCover::edges() const {
  std::vector<std::pair<AVertex, DVertex>> out;
  for (DVertex d = 0; d < num_d(); ++d) out.emplace_back(center_of_[d], d);
  std::sort(out.begin(), out.end());
  return out;
}

int effective_degree(const StarCover& sc, AVertex a) { return sc.effective_degree(a); }

StarCover initial_cover(const GStar& gs, const Matching& host_matching) {
  std::vector<AVertex> center_of(gs.num_d(), -1);
  for (DVertex d = 0; d < gs.num_d(); ++d) {
    const Vertex mate = host_matching.mate(gs.d_host[d]);
    if (mate != kNoVertex && gs.a_of_host[mate] >= 0) center_of[d] = gs.a_of_host[mate];
  }
  for (DVertex d = 0; d < gs.num_d(); ++d)
    if (center_of[d] < 0) center_of[d] = gs.d_adj[d].front();
  return StarCover(gs, std::move(center_of));
}

AlternatingForest build_forest(const GStar& gs, const StarCover& sc) {
  if (sc.max_degree() < 2) throw PreconditionError("forest search needs Δ ≥ 2");

  // Star ends bucketed by center, ascending.
  std::vector<int> start(gs.num_a() + 1, 0);
  for (DVertex d = 0; d < gs.num_d(); ++d) ++start[sc.center_of(d) + 1];
  for (AVertex a = 0; a < gs.num_a(); ++a) start[a + 1] += start[a];
  std::vector<DVertex> ends(gs.num_d());
  {
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (DVertex d = 0; d < gs.num_d(); ++d) ends[fill[sc.center_of(d)]++] = d;
  }

  AlternatingForest f;
  f.a_tree.assign(gs.num_a(), -1);
  f.d_tree.assign(gs.num_d(), -1);
  f.attached_by.assign(gs.num_a(), -1);

  std::vector<DVertex> queue;
  const int top = sc.max_degree();
  for (AVertex u = 0; u < gs.num_a(); ++u) {
    if (sc.effective_degree(u) != top || f.contains(u)) continue;
    const int tree = static_cast<int>(f.roots.size());
    f.roots.push_back(u);
    queue.clear();
    auto add_star = [&](AVertex y) {
      f.a_tree[y] = tree;
      f.a_members.push_back(y);
      for (int i = start[y]; i < start[y + 1]; ++i) {
        f.d_tree[ends[i]] = tree;
        queue.push_back(ends[i]);
      }
    };
    add_star(u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const DVertex x = queue[head];
      for (AVertex y : gs.d_adj[x]) {
        if (f.contains(y)) continue;
        f.attached_by[y] = x;
        add_star(y);
      }
    }
  }
  assert(forest_is_closed(gs, f));
  return f;
}

bool forest_is_closed(const GStar& gs, const AlternatingForest& f) {
  for (DVertex d = 0; d < gs.num_d(); ++d) {
    if (f.d_tree[d] < 0) continue;
    for (AVertex a : gs.d_adj[d])
      if (!f.contains(a)) return false;
  }
  return true;
}

std::optional<SwitchingPath> find_switching_path(const AlternatingForest& f, const StarCover& sc) {
  AVertex v = -1;
  for (AVertex a = 0; a < static_cast<AVertex>(f.a_tree.size()); ++a) {
    if (!f.contains(a)) continue;
    if (v < 0 || sc.effective_degree(a) < sc.effective_degree(v)) v = a;
  }
  if (v < 0) return std::nullopt;
  const AVertex u = f.roots[f.a_tree[v]];
  if (sc.effective_degree(v) > sc.effective_degree(u) - 2) return std::nullopt;

  SwitchingPath p;
  for (AVertex a = v; a != u;) {
    const DVertex x = f.attached_by[a];
    p.centers.push_back(a);
    p.ends.push_back(x);
    a = sc.center_of(x);
  }
  p.centers.push_back(u);
  std::reverse(p.centers.begin(), p.centers.end());
  std::reverse(p.ends.begin(), p.ends.end());
  return p;
}

StarCover transform(const GStar& gs, const StarCover& sc, const SwitchingPath& p) {
  const auto& centers = p.centers;
  const auto& ends = p.ends;
  if (ends.empty() || centers.size() != ends.size() + 1)
    throw PreconditionError("switching path must alternate center, end, ..., center");
  std::vector<char> seen_a(gs.num_a(), 0), seen_d(gs.num_d(), 0);
  for (AVertex a : centers) {
    if (a < 0 || a >= gs.num_a() || seen_a[a]++) throw PreconditionError("switching path repeats a center");
  }
  for (DVertex d : ends) {
    if (d < 0 || d >= gs.num_d() || seen_d[d]++) throw PreconditionError("switching path repeats an end");
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (sc.center_of(ends[i]) != centers[i])
      throw PreconditionError("switching path edge " + std::to_string(2 * i) + " is not in M_c");
    if (!gs.has_edge(centers[i + 1], ends[i]))
      throw PreconditionError("switching path edge " + std::to_string(2 * i + 1) + " is not in G*");
  }
  const int du = sc.effective_degree(p.origin());
  const int dv = sc.effective_degree(p.terminus());
  if (du != sc.max_degree()) throw PreconditionError("switching path must start at a maximum center");
  if (du < dv + 2) throw PreconditionError("switching path needs d(origin) ≥ d(terminus) + 2");

  std::vector<AVertex> center_of(gs.num_d());
  for (DVertex d = 0; d < gs.num_d(); ++d) center_of[d] = sc.center_of(d);
  for (std::size_t i = 0; i < ends.size(); ++i) center_of[ends[i]] = centers[i + 1];
  return StarCover(gs, std::move(center_of));
}

OptimizeResult optimize(const GStar& gs, StarCover sc0,
                        const std::function<void(const TransformEvent&)>& trace) {
  OptimizeResult result{std::move(sc0), 0};
  StarCover& sc = result.cover;
  int delta = sc.max_degree();
  while (delta >= 2) {
    const AlternatingForest forest = build_forest(gs, sc);
    const auto path = find_switching_path(forest, sc);
    if (!path) break;
    sc = transform(gs, sc, *path);
    if (++result.transforms > gs.num_vertices())
      throw InvariantError("switching-path transforms exceeded |V(G*)| = " +
                           std::to_string(gs.num_vertices()));
    const int next = sc.max_degree();
    if (next > delta) throw InvariantError("maximum star size increased after a transform");
    delta = next;
    if (trace)
      trace({gs.a_host[path->origin()], gs.a_host[path->terminus()], path->length(), delta});
  }
  return result;
}

}  // namespace mcover
