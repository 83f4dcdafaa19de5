#include "connsets/graph.hpp"

#include <algorithm>
#include <functional>

#include "connsets/errors.hpp"

namespace connsets {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices)
    throw ContractError("graph order must be in [1, 64], got " + std::to_string(n));
}

void check_subset(const Graph& g, VertexSet s, const char* what) {
  if (!s.subset_of(g.vertices()))
    throw ContractError(std::string(what) + ": vertex set " + s.to_string() +
                        " is not inside 0.." + std::to_string(g.order() - 1));
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges, std::string label)
    : label_(std::move(label)) {
  check_order(n);
  adj_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ContractError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for n=" + std::to_string(n));
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v))
      throw ContractError("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++edges_;
  }
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows, std::string label) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::prefix(n);
  int degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!rows[v].subset_of(all)) throw ContractError("adjacency row out of range");
    if (rows[v].contains(v)) throw ContractError("self-loop at vertex " + std::to_string(v));
    for (Vertex u : rows[v])
      if (!rows[u].contains(v)) throw ContractError("asymmetric adjacency");
    degree_sum += rows[v].size();
  }
  Graph g;
  g.adj_ = std::move(rows);
  g.edges_ = degree_sum / 2;
  g.label_ = std::move(label);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u] - VertexSet::prefix(u + 1)) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

VertexSet reach_within(const Graph& g, VertexSet s, Vertex start) {
  VertexSet reached = VertexSet::single(start);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & s) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

bool induced_is_connected(const Graph& g, VertexSet s) {
  if (s.empty()) throw ContractError("induced_is_connected: vertex set must be nonempty");
  check_subset(g, s, "induced_is_connected");
  return reach_within(g, s, s.first()) == s;
}

bool is_connected(const Graph& g) { return induced_is_connected(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  check_subset(g, s, "components");
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet block = reach_within(g, rest, rest.first());
    out.push_back(block);
    rest -= block;
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, VertexSet keep) {
  check_subset(g, keep, "induced_subgraph");
  if (keep.empty()) throw ContractError("induced_subgraph: cannot keep zero vertices");
  std::vector<Vertex> to_parent = keep.to_vector();
  std::vector<Vertex> to_child(g.order(), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) to_child[to_parent[i]] = static_cast<Vertex>(i);
  std::vector<VertexSet> rows(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    for (Vertex u : g.neighbors(to_parent[i]) & keep) rows[i].insert(to_child[u]);
  return {Graph::from_adjacency(std::move(rows)), std::move(to_parent)};
}

Subgraph delete_vertices(const Graph& g, VertexSet remove) {
  check_subset(g, remove, "delete_vertices");
  if (remove == g.vertices()) throw ContractError("delete_vertices: cannot delete every vertex");
  return induced_subgraph(g, g.vertices() - remove);
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.insert(v);
  return out;
}

VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw ContractError("cut_vertices: graph is disconnected");
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  VertexSet cuts;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cuts.insert(v);
    }
    if (parent < 0 && children > 1) cuts.insert(v);
  };
  dfs(0, -1);
  return cuts;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_bicyclic(const Graph& g) { return g.size() == g.order() + 1 && is_connected(g); }

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return Graph(g.order() + h.order(), edges);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw ContractError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges, g.label());
}

}  // namespace connsets
