#include <algorithm>

#include "connsets/bicyclic.hpp"
#include "connsets/errors.hpp"

namespace connsets {

std::vector<std::vector<int>> rooted_level_sequences(int k) {
  if (k < 1 || k > kMaxVertices) throw ContractError("rooted_level_sequences: k must be in [1, 64]");
  std::vector<std::vector<int>> out;
  std::vector<int> levels(k);
  for (int i = 0; i < k; ++i) levels[i] = i;
  while (true) {
    out.push_back(levels);
    int p = k - 1;
    while (p > 0 && levels[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (levels[q] != levels[p] - 1) --q;
    for (int i = p; i < k; ++i) levels[i] = levels[i - (p - q)];
  }
  return out;
}

Graph tree_from_levels(const std::vector<int>& levels) {
  const int k = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_depth(k + 1, -1);
  for (Vertex i = 0; i < k; ++i) {
    int d = levels[i];
    if ((i == 0) != (d == 0) || (i > 0 && (d > k || last_at_depth[d - 1] < 0)))
      throw ContractError("tree_from_levels: not a level sequence");
    if (i > 0) edges.emplace_back(last_at_depth[d - 1], i);
    last_at_depth[d] = i;
  }
  return Graph(k, edges);
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 10) throw ContractError("enumerate_trees: n must be in [1, 10]");
  std::vector<std::pair<Certificate, Graph>> found;
  for (const auto& seq : rooted_level_sequences(n)) {
    Graph t = tree_from_levels(seq);
    found.emplace_back(canonical_certificate(t), canonical_form(t));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  found.erase(std::unique(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              found.end());
  std::vector<Graph> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace connsets
