#pragma once

#include <cstdint>
#include <random>

#include "connsets/graph.hpp"

namespace connsets {

// Seeded source of small random connected graphs. Same seed, same stream.
class RandomGraphs {
 public:
  explicit RandomGraphs(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  Vertex vertex_of(const Graph& g) { return uniform(0, g.order() - 1); }

  // Each vertex i > 0 picks a parent uniformly among 0..i-1, then ids are shuffled.
  Graph tree(int n);
  // A random tree plus each remaining pair independently with probability p.
  Graph connected(int n, double p);

 private:
  std::mt19937_64 rng_;
};

}  // namespace connsets
