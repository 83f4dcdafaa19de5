#pragma once

// Reference implementations used only by the tests. They deliberately avoid
// the library's bitmask kernels and canonical labeling.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "connsets/graph.hpp"

namespace oracle {

using connsets::Edge;
using connsets::Graph;
using connsets::Vertex;

inline std::vector<std::vector<bool>> matrix_of(const Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

// Depth-first search restricted to `members` over an adjacency matrix.
inline bool members_connected(const std::vector<std::vector<bool>>& m, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::vector<bool> in(m.size(), false), seen(m.size(), false);
  for (int x : members) in[x] = true;
  std::vector<int> stack{members[0]};
  seen[members[0]] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < m.size(); ++y)
      if (m[x][y] && in[y] && !seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(static_cast<int>(y));
      }
  }
  return reached == members.size();
}

// Number of connected vertex sets containing every vertex of `required`.
inline std::uint64_t naive_count(const Graph& g, const std::vector<int>& required = {}) {
  auto m = matrix_of(g);
  const int n = g.order();
  std::uint64_t total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    bool has_all = std::all_of(required.begin(), required.end(), [&](int r) { return mask >> r & 1; });
    if (has_all && members_connected(m, members)) ++total;
  }
  return total;
}

inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

// Exhaustive permutation search; practical for n <= 8.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto hm = matrix_of(h);
  const auto ge = g.edges();
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : ge)
      if (!hm[perm[u]][perm[v]]) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every labeled tree on n >= 2 vertices, decoded from its Pruefer sequence.
inline std::vector<Graph> pruefer_trees(int n) {
  std::vector<Graph> out;
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    std::vector<int> last;
    for (int i = 0; i < n; ++i)
      if (degree[i] == 1) last.push_back(i);
    edges.emplace_back(last[0], last[1]);
    out.emplace_back(n, edges);

    int i = n - 3;
    while (i >= 0 && ++seq[i] == n) seq[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// Uniform random connected graph: random spanning tree plus extra edges.
inline Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::vector<bool> used(n * n, false);
  for (int i = 1; i < n; ++i) {
    int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.emplace_back(j, i);
    used[j * n + i] = true;
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used[u * n + v] && coin(rng)) edges.emplace_back(u, v);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permuted(Graph(n, edges), perm);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
