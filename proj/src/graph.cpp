#include "mcover/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace mcover {

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw PreconditionError("duplicate edge");

  offset_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offset_[e.u + 1];
    ++offset_[e.v + 1];
  }
  std::partial_sum(offset_.begin(), offset_.end(), offset_.begin());
  adj_.resize(2 * edges_.size());
  adj_ids_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
  // Sorted (u, v) order fills every adjacency list in ascending order.
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    adj_[fill[e.u]] = e.v;
    adj_ids_[fill[e.u]++] = id;
    adj_[fill[e.v]] = e.u;
    adj_ids_[fill[e.v]++] = id;
  }
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return adj_ids_[offset_[u] + (it - nb.begin())];
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }

VertexSet::VertexSet(Vertex n, std::span<const Vertex> members) : bits_(n, 0) {
  for (Vertex v : members) bits_.at(v) = 1;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < universe(); ++v)
    if (bits_[v]) out.push_back(v);
  return out;
}

EdgeSet::EdgeSet(const Graph& g, std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  for (EdgeId id : ids_)
    if (id < 0 || static_cast<std::size_t>(id) >= g.num_edges())
      throw PreconditionError("edge id out of range");
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

VertexSet EdgeSet::covered_vertices(const Graph& g) const {
  VertexSet out(g.num_vertices());
  for (EdgeId id : ids_) {
    out.insert(g.edge(id).u);
    out.insert(g.edge(id).v);
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  Subgraph sub;
  sub.from_host.assign(g.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!s.contains(v)) continue;
    sub.from_host[v] = static_cast<Vertex>(sub.to_host.size());
    sub.to_host.push_back(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v))
      kept.push_back({sub.from_host[e.u], sub.from_host[e.v]});
  sub.graph = Graph(static_cast<Vertex>(sub.to_host.size()), std::move(kept));
  return sub;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  VertexSet keep(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!removed.contains(v)) keep.insert(v);
  return induced_subgraph(g, keep);
}

VertexSet neighbor_set(const Graph& g, const VertexSet& s) {
  VertexSet out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!s.contains(v)) continue;
    for (Vertex w : g.neighbors(v))
      if (!s.contains(w)) out.insert(w);
  }
  return out;
}

std::vector<int> component_labels(const Graph& g, int* count) {
  std::vector<int> label(g.num_vertices(), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (label[root] >= 0) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] >= 0) continue;
        label[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

std::vector<VertexSet> components(const Graph& g) {
  int count = 0;
  auto label = component_labels(g, &count);
  std::vector<VertexSet> out(count, VertexSet(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[label[v]].insert(v);
  return out;
}

bool is_connected(const Graph& g) {
  int count = 0;
  component_labels(g, &count);
  return count <= 1;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view field, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(line_no, "expected integer, got '" + std::string(field) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::unordered_set<long long> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == 'c') continue;
    if (fields[0] == "p") {
      if (have_header) throw ParseError(line_no, "second header line");
      if (fields.size() != 3) throw ParseError(line_no, "malformed header, expected 'p <n> <m>'");
      n = parse_int(fields[1], line_no);
      m = parse_int(fields[2], line_no);
      if (n < 0 || m < 0) throw ParseError(line_no, "malformed header, negative count");
      if (n > (1LL << 30)) throw ParseError(line_no, "malformed header, vertex count too large");
      have_header = true;
      continue;
    }
    if (fields[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (fields.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
      long long u = parse_int(fields[1], line_no);
      long long v = parse_int(fields[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "edge endpoint out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      if (u > v) std::swap(u, v);
      if (!seen.insert(u * (n + 1) + v).second) throw ParseError(line_no, "duplicate edge");
      if (static_cast<long long>(edges.size()) >= m)
        throw ParseError(line_no, "more edges than declared in header");
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
      continue;
    }
    throw ParseError(line_no, "unrecognized line type '" + std::string(fields[0]) + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing header 'p <n> <m>'");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges();
  for (const Edge& e : g.edges()) out << "\ne " << e.u + 1 << ' ' << e.v + 1;
  return out.str();
}

}  // namespace mcover
