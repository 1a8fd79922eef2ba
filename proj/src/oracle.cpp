#include "mcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mcover::oracle {
namespace {

// Hard ceiling for the subset-indexed memo tables.
constexpr int kMaxMemoVertices = 24;

using Mask = std::uint32_t;

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : end_(std::chrono::steady_clock::now() + budget) {}
  void tick() {
    if ((++ticks_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > end_)
      throw BudgetExceeded("oracle timed out");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t ticks_ = 0;
};

void check_budget(int vertices, std::size_t edges, const OracleBudget& budget) {
  if (vertices > budget.max_vertices || vertices > kMaxMemoVertices)
    throw BudgetExceeded("oracle budget: " + std::to_string(vertices) + " vertices exceeds " +
                         std::to_string(std::min(budget.max_vertices, kMaxMemoVertices)));
  if (static_cast<long long>(edges) > budget.max_edges)
    throw BudgetExceeded("oracle budget: " + std::to_string(edges) + " edges exceeds " +
                         std::to_string(budget.max_edges));
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    out[e.u] |= Mask{1} << e.v;
    out[e.v] |= Mask{1} << e.u;
  }
  return out;
}

int lowest(Mask s) { return std::countr_zero(s); }

class NuSolver {
 public:
  NuSolver(const Graph& g, Deadline& deadline)
      : adj_(neighbor_masks(g)), memo_(std::size_t{1} << g.num_vertices(), -1), deadline_(deadline) {}

  int solve(Mask s) {
    if (s == 0) return 0;
    int& slot = memo_[s];
    if (slot >= 0) return slot;
    deadline_.tick();
    const int v = lowest(s);
    const Mask rest = s & ~(Mask{1} << v);
    int best = solve(rest);
    for (Mask cand = adj_[v] & rest; cand; cand &= cand - 1) {
      const int w = lowest(cand);
      best = std::max(best, 1 + solve(rest & ~(Mask{1} << w)));
    }
    return slot = best;
  }

 private:
  std::vector<Mask> adj_;
  std::vector<int> memo_;
  Deadline& deadline_;
};

// Can the vertex set `s` be split into stars of at most k edges each?
class StarPartition {
 public:
  StarPartition(const Graph& g, int k, Deadline& deadline)
      : adj_(neighbor_masks(g)), k_(k), memo_(std::size_t{1} << g.num_vertices(), 0), deadline_(deadline) {}

  bool feasible(Mask s) {
    if (s == 0) return true;
    char& slot = memo_[s];
    if (slot) return slot == 1;
    deadline_.tick();
    const int v = lowest(s);
    const Mask vbit = Mask{1} << v;
    const Mask rest = s & ~vbit;
    bool ok = false;
    // v as a center with leaves drawn from its free neighbors.
    const Mask free_nb = adj_[v] & rest;
    for (Mask leaves = free_nb; leaves && !ok; leaves = (leaves - 1) & free_nb)
      if (std::popcount(leaves) <= k_) ok = feasible(rest & ~leaves);
    // v as a leaf of some free neighbor c.
    for (Mask cand = free_nb; cand && !ok; cand &= cand - 1) {
      const int c = lowest(cand);
      const Mask cbit = Mask{1} << c;
      const Mask others = adj_[c] & rest & ~cbit;
      for (Mask extra = others;; extra = (extra - 1) & others) {
        if (std::popcount(extra) + 1 <= k_ && feasible(rest & ~cbit & ~extra)) {
          ok = true;
          break;
        }
        if (extra == 0) break;
      }
    }
    slot = ok ? 1 : 2;
    return ok;
  }

 private:
  std::vector<Mask> adj_;
  int k_;
  std::vector<char> memo_;
  Deadline& deadline_;
};

class LoadAssignment {
 public:
  LoadAssignment(const GStar& gs, int k, Deadline& deadline)
      : gs_(gs), k_(k), load_(gs.num_a(), 0), deadline_(deadline) {
    for (DVertex d = 0; d < gs.num_d(); ++d) order_.push_back(d);
    std::stable_sort(order_.begin(), order_.end(), [&](DVertex x, DVertex y) {
      return gs.d_adj[x].size() < gs.d_adj[y].size();
    });
  }

  bool feasible(std::size_t i = 0) {
    if (i == order_.size()) return true;
    deadline_.tick();
    for (AVertex a : gs_.d_adj[order_[i]]) {
      if (load_[a] == k_) continue;
      ++load_[a];
      const bool ok = feasible(i + 1);
      --load_[a];
      if (ok) return true;
    }
    return false;
  }

 private:
  const GStar& gs_;
  int k_;
  std::vector<int> load_;
  std::vector<DVertex> order_;
  Deadline& deadline_;
};

Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

}  // namespace

int brute_nu(const Graph& g, const OracleBudget& budget) {
  check_budget(g.num_vertices(), g.num_edges(), budget);
  Deadline deadline(budget.timeout);
  NuSolver solver(g, deadline);
  return solver.solve(full_mask(g.num_vertices()));
}

int brute_mc(const Graph& g, const OracleBudget& budget) {
  check_budget(g.num_vertices(), g.num_edges(), budget);
  if (g.num_vertices() < 2) throw NoCoverError("no matching cover exists: fewer than 2 vertices");
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) throw NoCoverError("no matching cover exists: isolated vertex");
  Deadline deadline(budget.timeout);
  const int top = static_cast<int>(g.max_degree());
  for (int k = 1; k <= top; ++k) {
    StarPartition partition(g, k, deadline);
    if (partition.feasible(full_mask(g.num_vertices()))) return k;
  }
  // A star of Δ(G) edges around every vertex always fits.
  throw InvariantError("star partition search exhausted every k");
}

int brute_md(const GStar& gs, const OracleBudget& budget) {
  check_budget(gs.num_vertices(), gs.num_edges, budget);
  if (gs.num_d() == 0) return 0;
  Deadline deadline(budget.timeout);
  for (DVertex d = 0; d < gs.num_d(); ++d)
    if (gs.d_adj[d].empty()) throw PreconditionError("D-vertex without an A-neighbor");
  for (int k = 1; k <= gs.num_d(); ++k) {
    LoadAssignment search(gs, k, deadline);
    if (search.feasible()) return k;
  }
  throw InvariantError("load assignment search exhausted every k");
}

VertexSet brute_d_set(const Graph& g, const OracleBudget& budget) {
  check_budget(g.num_vertices(), g.num_edges(), budget);
  Deadline deadline(budget.timeout);
  NuSolver solver(g, deadline);
  const Mask all = full_mask(g.num_vertices());
  const int nu = solver.solve(all);
  VertexSet d(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (solver.solve(all & ~(Mask{1} << v)) == nu) d.insert(v);
  return d;
}

}  // namespace mcover::oracle
