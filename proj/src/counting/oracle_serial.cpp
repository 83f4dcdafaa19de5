#include "connsets/oracle_kernels.hpp"

namespace connsets::kernels {

PackedGraph pack(const Graph& g, VertexSet required) {
  PackedGraph pg;
  std::array<int, 64> slot{};
  int next = 0;
  for (Vertex v : g.vertices() - required) slot[v] = next++;
  pg.free_bits = next;
  for (Vertex v : required) slot[v] = next++;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::uint64_t row = 0;
    for (Vertex u : g.neighbors(v)) row |= std::uint64_t{1} << slot[u];
    pg.adj[slot[v]] = row;
  }
  for (Vertex v : required) pg.required |= std::uint64_t{1} << slot[v];
  return pg;
}

Count count_connected_serial(const PackedGraph& pg) {
  const std::uint64_t limit = std::uint64_t{1} << pg.free_bits;
  Count total = 0;
  for (std::uint64_t i = pg.required ? 0 : 1; i < limit; ++i)
    if (connected_mask(pg, i | pg.required)) ++total;
  return total;
}

}  // namespace connsets::kernels
