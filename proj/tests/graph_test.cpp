#include "mcover/graph.hpp"

#include <gtest/gtest.h>

#include "mcover/random_graph.hpp"
#include "testing/graphs.hpp"

namespace mcover {
namespace {

using testing::make_graph;
using testing::path_graph;

TEST(ParseGraph, SmallestGraph) {
  Graph g = parse_graph("p 2 1\ne 1 2");
  EXPECT_EQ(g.num_vertices(), 2);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
}

TEST(ParseGraph, Triangle) {
  Graph g = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3");
  EXPECT_EQ(g, testing::complete_graph(3));
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(ParseGraph, DuplicateEdgeNamesLine) {
  try {
    parse_graph("p 3 2\ne 1 2\ne 2 3\ne 2 3");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("duplicate edge"), std::string::npos);
  }
}

TEST(ParseGraph, CommentsCrlfAndReversedEndpoints) {
  Graph g = parse_graph("c hello\r\np 3 2\r\n\r\ne 2 1\r\nc mid\r\ne 3 2\r\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(ParseGraph, Errors) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p 3"), 1u);                  // malformed header
  EXPECT_EQ(line_of("p x 1\ne 1 2"), 1u);         // non-numeric header
  EXPECT_EQ(line_of("e 1 2\np 2 1"), 1u);         // edge before header
  EXPECT_EQ(line_of("p 2 1\ne 1 3"), 2u);         // out of range
  EXPECT_EQ(line_of("p 2 1\ne 0 1"), 2u);         // 1-indexed
  EXPECT_EQ(line_of("p 2 1\ne 2 2"), 2u);         // self-loop
  EXPECT_EQ(line_of("p 3 1\ne 1 2\ne 2 3"), 3u);  // more edges than declared
  EXPECT_GT(line_of("p 3 2\ne 1 2"), 0u);         // fewer edges than declared
  EXPECT_EQ(line_of("p 2 1\nx 1 2"), 2u);         // unknown line
  EXPECT_EQ(line_of("p 2 1\np 2 1"), 2u);         // second header
  EXPECT_GT(line_of(""), 0u);                     // no header
}

TEST(Graph, ConstructorRejectsNonSimpleInput) {
  EXPECT_THROW(Graph(2, {{0, 0}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 2}}), PreconditionError);
}

TEST(Graph, AdjacencySortedAndConsistent) {
  Graph g(5, {{3, 4}, {0, 4}, {2, 0}, {1, 4}, {0, 1}});
  for (Vertex v = 0; v < 5; ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex w : nb) {
      EXPECT_TRUE(g.has_edge(w, v));
      EdgeId id = g.edge_id(v, w);
      ASSERT_GE(id, 0);
      EXPECT_EQ(g.edge(id), (Edge{std::min(v, w), std::max(v, w)}));
    }
  }
  EXPECT_EQ(g.edge_id(2, 3), -1);
  EXPECT_EQ(g.max_degree(), 3u);
}

TEST(InducedSubgraph, Examples) {
  Graph c3 = testing::complete_graph(3);
  Subgraph k2 = induced_subgraph(c3, VertexSet(3, std::vector<Vertex>{0, 1}));
  EXPECT_EQ(k2.graph, make_graph(2, {{0, 1}}));

  Subgraph empty = induced_subgraph(c3, VertexSet(3));
  EXPECT_EQ(empty.graph.num_vertices(), 0);
  EXPECT_EQ(empty.graph.num_edges(), 0u);

  Subgraph p = induced_subgraph(path_graph(4), VertexSet(4, std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(p.graph, make_graph(3, {{0, 1}}));
  EXPECT_EQ(p.to_host, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(p.from_host, (std::vector<Vertex>{0, 1, kNoVertex, 2}));
}

TEST(NeighborSet, Examples) {
  Graph p3 = path_graph(3);
  EXPECT_EQ(neighbor_set(p3, VertexSet(3, std::vector<Vertex>{0, 2})).members(),
            (std::vector<Vertex>{1}));
  EXPECT_EQ(neighbor_set(p3, VertexSet(3, std::vector<Vertex>{1})).members(),
            (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(neighbor_set(testing::complete_graph(3), VertexSet(3, std::vector<Vertex>{0})).members(),
            (std::vector<Vertex>{1, 2}));
}

TEST(Components, Examples) {
  auto as_lists = [](const std::vector<VertexSet>& parts) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& p : parts) out.push_back(p.members());
    return out;
  };
  using Lists = std::vector<std::vector<Vertex>>;
  EXPECT_EQ(as_lists(components(path_graph(2))), (Lists{{0, 1}}));
  EXPECT_EQ(as_lists(components(make_graph(4, {{0, 1}, {2, 3}}))), (Lists{{0, 1}, {2, 3}}));
  EXPECT_EQ(as_lists(components(Graph(3, {}))), (Lists{{0}, {1}, {2}}));
}

TEST(SerializeGraph, Examples) {
  EXPECT_EQ(serialize_graph(path_graph(2)), "p 2 1\ne 1 2");
  EXPECT_EQ(serialize_graph(Graph(1, {})), "p 1 0");
  EXPECT_EQ(serialize_graph(testing::complete_graph(3)), "p 3 3\ne 1 2\ne 1 3\ne 2 3");
}

TEST(GraphProperties, RandomGraphs) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng.below(12));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.3)) edges.push_back({u, v});
    const Graph g(n, edges);

    EXPECT_EQ(parse_graph(serialize_graph(g)), g);

    VertexSet all(n);
    for (Vertex v = 0; v < n; ++v) all.insert(v);
    EXPECT_EQ(induced_subgraph(g, all).graph, g);

    const auto parts = components(g);
    const auto label = component_labels(g);
    std::size_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      total += parts[i].size();
      // Internally connected.
      Subgraph sub = induced_subgraph(g, parts[i]);
      EXPECT_TRUE(is_connected(sub.graph));
      for (Vertex v : parts[i].members()) EXPECT_EQ(label[v], static_cast<int>(i));
      if (i > 0) EXPECT_LT(parts[i - 1].members().front(), parts[i].members().front());
    }
    EXPECT_EQ(total, static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) EXPECT_EQ(label[e.u], label[e.v]);
  }
}

}  // namespace
}  // namespace mcover
