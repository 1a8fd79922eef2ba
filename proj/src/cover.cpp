#include "mcover/cover.hpp"

#include <algorithm>
#include <string>

namespace mcover {

std::string_view branch_name(CoverBranch b) {
  switch (b) {
    case CoverBranch::Perfect: return "perfect";
    case CoverBranch::FactorCritical: return "factor-critical";
    case CoverBranch::GStar: return "gstar";
    case CoverBranch::Disconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

void add_disjoint(Matching& m, Vertex u, Vertex v, const char* what) {
  if (m.is_matched(u) || m.is_matched(v))
    throw InvariantError(std::string(what) + ": edge " + std::to_string(u + 1) + "-" +
                         std::to_string(v + 1) + " overlaps the matching");
  m.match(u, v);
}

SolveResult solve_connected(const Graph& g, const TraceFn& trace) {
  SolveResult out;
  GallaiEdmonds ge = decompose(g);
  const Matching& m = ge.max_matching;

  if (ge.a.empty()) {
    if (ge.d.empty()) {
      out.branch = CoverBranch::Perfect;
      out.cover.matchings = {m};
      return out;
    }
    // G is factor-critical and m misses exactly one vertex.
    out.branch = CoverBranch::FactorCritical;
    Vertex exposed = kNoVertex;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (m.is_matched(v)) continue;
      if (exposed != kNoVertex) throw InvariantError("factor-critical branch with two exposed vertices");
      exposed = v;
    }
    if (exposed == kNoVertex) throw InvariantError("factor-critical branch without an exposed vertex");
    Matching extra(g.num_vertices());
    extra.match(exposed, g.neighbors(exposed).front());
    out.cover.matchings = {m, extra};
    return out;
  }

  out.branch = CoverBranch::GStar;
  GStar gs = build_gstar(g, ge);
  OptimizeResult opt = optimize(gs, initial_cover(gs, m), trace);
  out.md = opt.cover.max_degree();
  out.transforms = opt.transforms;
  out.gstar_vertices = gs.num_vertices();
  out.cover = assemble(g, ge, gs, opt.cover);
  return out;
}

}  // namespace

MatchingCover assemble(const Graph& g, const GallaiEdmonds& ge, const GStar& gs,
                       const StarCover& sc_final) {
  const Vertex n = g.num_vertices();
  const Matching& m = ge.max_matching;

  // M' = M ∩ E(G[C]), perfect on C.
  Matching m_prime(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!ge.c.contains(v)) continue;
    const Vertex w = m.mate(v);
    if (w == kNoVertex || !ge.c.contains(w))
      throw InvariantError("maximum matching is not perfect on C(G)");
    if (v < w) m_prime.match(v, w);
  }

  std::vector<std::vector<DVertex>> stars(gs.num_a());
  for (DVertex d = 0; d < gs.num_d(); ++d) stars[sc_final.center_of(d)].push_back(d);

  // N: the lowest edge of every star, extended to a maximum matching of G − C.
  Subgraph rest = remove_vertices(g, ge.c);
  Matching seed(rest.graph.num_vertices());
  for (AVertex a = 0; a < gs.num_a(); ++a) {
    if (stars[a].empty()) continue;
    seed.match(rest.from_host[gs.a_host[a]], rest.from_host[gs.d_host[stars[a].front()]]);
  }
  const Matching tilde_local = maximum_matching_covering(rest.graph, seed);

  Matching first = m_prime;
  for (const Edge& e : tilde_local.edges())
    add_disjoint(first, rest.to_host[e.u], rest.to_host[e.v], "M~ against M'");

  VertexSet covered = first.covered_vertices();
  for (DVertex d = 0; d < gs.num_d(); ++d) covered.insert(gs.d_host[d]);

  // M'': one edge inside G[D] for every D-vertex still uncovered.
  Matching second(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!ge.d.contains(v) || covered.contains(v) || second.is_matched(v)) continue;
    Vertex partner = kNoVertex;
    for (Vertex w : g.neighbors(v))
      if (ge.d.contains(w)) {
        partner = w;
        break;
      }
    if (partner == kNoVertex) throw InvariantError("uncovered vertex outside every non-trivial D-component");
    add_disjoint(second, v, partner, "M''");
  }

  const int k_star = sc_final.max_degree();
  MatchingCover cover;
  cover.matchings.assign(std::max(2, k_star), Matching(n));
  cover.matchings[0] = std::move(first);
  cover.matchings[1] = std::move(second);
  for (AVertex a = 0; a < gs.num_a(); ++a)
    for (std::size_t j = 1; j < stars[a].size(); ++j)
      add_disjoint(cover.matchings[j], gs.a_host[a], gs.d_host[stars[a][j]], "star level");

  if (!verify_cover(g, cover)) throw InvariantError("assembled family does not cover V(G)");
  return cover;
}

SolveResult solve(const Graph& g, const TraceFn& trace) {
  const Vertex n = g.num_vertices();
  if (n < 2) throw NoCoverError("no matching cover exists: graph has fewer than 2 vertices");
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw NoCoverError("no matching cover exists: vertex " + std::to_string(v + 1) + " is isolated");

  int count = 0;
  const auto label = component_labels(g, &count);
  if (count == 1) return solve_connected(g, trace);

  SolveResult out;
  out.branch = CoverBranch::Disconnected;
  for (int c = 0; c < count; ++c) {
    VertexSet part(n);
    for (Vertex v = 0; v < n; ++v)
      if (label[v] == c) part.insert(v);
    Subgraph sub = induced_subgraph(g, part);
    SolveResult piece = solve_connected(sub.graph, trace ? TraceFn([&](const TransformEvent& e) {
      trace({sub.to_host[e.origin], sub.to_host[e.terminus], e.path_length, e.max_degree});
    }) : TraceFn{});
    out.md = std::max(out.md, piece.md);
    out.transforms += piece.transforms;
    out.gstar_vertices += piece.gstar_vertices;
    if (out.cover.size() < piece.cover.size()) out.cover.matchings.resize(piece.cover.size(), Matching(n));
    for (std::size_t level = 0; level < piece.cover.size(); ++level)
      for (const Edge& e : piece.cover.matchings[level].edges())
        out.cover.matchings[level].match(sub.to_host[e.u], sub.to_host[e.v]);
  }
  return out;
}

MatchingCover matching_cover(const Graph& g) { return solve(g).cover; }

bool verify_cover(const Graph& g, const MatchingCover& mc) {
  VertexSet covered(g.num_vertices());
  for (const Matching& m : mc.matchings) {
    if (!m.is_valid_on(g)) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (m.is_matched(v)) covered.insert(v);
  }
  return covered.size() == static_cast<std::size_t>(g.num_vertices());
}

}  // namespace mcover
