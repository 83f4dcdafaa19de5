#include "connsets/random_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "connsets/errors.hpp"

namespace connsets {

int RandomGraphs::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Graph RandomGraphs::tree(int n) {
  if (n < 1 || n > kMaxVertices) throw ContractError("random tree order out of range");
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng_);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(ids[i], ids[uniform(0, i - 1)]);
  return Graph(n, edges);
}

Graph RandomGraphs::connected(int n, double p) {
  Graph t = tree(n);
  std::vector<Edge> edges = t.edges();
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!t.has_edge(u, v) && coin(rng_)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace connsets
