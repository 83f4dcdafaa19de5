#include <algorithm>

#include "connsets/bicyclic.hpp"
#include "connsets/errors.hpp"

namespace connsets::crosscheck {

std::vector<Certificate> labeled_bicyclic_certificates(int n, int cap) {
  if (n < 4) throw ContractError("labeled_bicyclic_certificates: n must be at least 4");
  if (n > cap) throw ResourceError("labeled_bicyclic_certificates: n=" + std::to_string(n) + " exceeds cap " +
                                   std::to_string(cap));
  std::vector<Edge> slots;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  const int want = n + 1;
  const int total = static_cast<int>(slots.size());

  std::vector<Certificate> found;
  std::vector<int> chosen;
  std::vector<int> degree(n, 0);

  auto accept = [&] {
    for (Vertex v = 1; v < n; ++v)
      if (degree[v] > degree[v - 1]) return;
    std::vector<Edge> edges;
    for (int s : chosen) edges.push_back(slots[s]);
    Graph g(n, edges);
    if (is_connected(g)) found.push_back(canonical_certificate(g));
  };

  // Plain recursion over (n+1)-subsets of the edge slots.
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chosen.size()) == want) {
      accept();
      return;
    }
    for (int s = from; s <= total - (want - static_cast<int>(chosen.size())); ++s) {
      chosen.push_back(s);
      ++degree[slots[s].first];
      ++degree[slots[s].second];
      self(self, s + 1);
      --degree[slots[s].first];
      --degree[slots[s].second];
      chosen.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace connsets::crosscheck
