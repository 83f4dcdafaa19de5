#pragma once

#include <string>
#include <utility>
#include <vector>

#include "connsets/vertex_set.hpp"

namespace connsets {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1, 1 <= n <= 64. Immutable once
// built; adjacency rows are bitmasks so set operations are word-wide.
class Graph {
 public:
  // Throws ContractError on loops, out-of-range endpoints, or n outside
  // [1, 64]. Duplicate edges are rejected too (the graph must be simple).
  Graph(int n, const std::vector<Edge>& edges, std::string label = {});
  // Rows must be symmetric, loop-free and confined to the first n bits.
  static Graph from_adjacency(std::vector<VertexSet> rows, std::string label = {});

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edges_; }
  VertexSet vertices() const { return VertexSet::prefix(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const std::vector<VertexSet>& adjacency() const { return adj_; }
  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  Graph() = default;
  std::vector<VertexSet> adj_;
  int edges_ = 0;
  std::string label_;
};

// Graph on a vertex subset, reindexed contiguously in increasing id order.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new id -> id in the original graph
};

// Vertices of |s| reachable from the lowest member inside the induced subgraph.
VertexSet reach_within(const Graph& g, VertexSet s, Vertex start);

bool induced_is_connected(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
// Blocks ordered by their smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet s);
Subgraph induced_subgraph(const Graph& g, VertexSet keep);
Subgraph delete_vertices(const Graph& g, VertexSet remove);
VertexSet pendant_vertices(const Graph& g);
// Articulation points by DFS lowpoints; g must be connected.
VertexSet cut_vertices(const Graph& g);
bool is_tree(const Graph& g);
// Connected with exactly one more edge than vertices.
bool is_bicyclic(const Graph& g);

// Disjoint union; vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
// Apply perm: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace connsets
