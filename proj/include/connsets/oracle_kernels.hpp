#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "connsets/counting.hpp"

// Brute-force subset kernels. The serial kernel is the reference; the OpenMP
// kernel partitions the same index range and must return identical totals.
namespace connsets::kernels {

// Adjacency relabeled so the vertices free to vary occupy bits 0..free_bits-1
// and the required vertices sit above them. Subset index i then maps to the
// vertex mask i | required.
struct PackedGraph {
  std::array<std::uint64_t, 64> adj{};
  int free_bits = 0;
  std::uint64_t required = 0;
};

PackedGraph pack(const Graph& g, VertexSet required);

inline bool connected_mask(const PackedGraph& pg, std::uint64_t s) {
  std::uint64_t reached = s & (~s + 1);
  std::uint64_t frontier = reached;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= pg.adj[std::countr_zero(f)];
    next &= s & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

Count count_connected_serial(const PackedGraph& pg);
Count count_connected_omp(const PackedGraph& pg, int workers);

}  // namespace connsets::kernels
