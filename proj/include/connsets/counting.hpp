#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "connsets/graph.hpp"

namespace connsets {

// Connected-set counts. For n <= 64 every count fits in 64 bits (at most
// 2^64 - 1 nonempty subsets); intermediate arithmetic is overflow-checked.
using Count = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_sub(Count a, Count b);
Count checked_mul(Count a, Count b);
// 2^k for 0 <= k <= 63
Count pow2(int k);

enum class CountMethod { oracle, decomposition, closed_form };
std::string to_string(CountMethod m);

struct CountResult {
  Count total = 0;
  CountMethod method = CountMethod::oracle;
  std::chrono::nanoseconds elapsed{0};
};

struct RootedCount {
  Vertex at = 0;
  Count value = 0;
};

struct OracleOptions {
  int cap = 24;     // largest n the brute-force oracle accepts
  int workers = 1;  // 1: serial reference kernel; 0: OpenMP default; k > 1: k threads
};

// Number of nonempty vertex subsets inducing a connected subgraph. A
// disconnected graph yields the sum over its components.
CountResult oracle_count(const Graph& g, const OracleOptions& opt = {});
// Sets containing v, enumerated directly over the other n - 1 vertices.
RootedCount oracle_count_rooted(const Graph& g, Vertex v, const OracleOptions& opt = {});
// Sets containing both u and v.
Count oracle_count_pair(const Graph& g, Vertex u, Vertex v, const OracleOptions& opt = {});
// Sets containing every vertex in `required` (nonempty).
Count oracle_count_containing(const Graph& g, VertexSet required, const OracleOptions& opt = {});

struct IdentifiedCount {
  Count total = 0;
  Count rooted = 0;  // at the identified vertex
};

// H = H1 and H2 glued at one vertex:
//   N(H)   = N(H1) + N(H2) - 1 + (N(H1)_u1 - 1)(N(H2)_u2 - 1)
//   N(H)_u = N(H1)_u1 * N(H2)_u2
IdentifiedCount combine_identified(Count total1, Count rooted1, Count total2, Count rooted2);

// N(H) when H is H - v plus a pendant v whose neighbour has rooted count
// `rooted_neighbor` in H - v.
Count extend_pendant(Count total, Count rooted_neighbor);

// Product recursion over children; t must be a tree.
RootedCount tree_rooted_count(const Graph& t, Vertex v);
Count tree_count(const Graph& t);

// Exact N(g) for connected g via closed forms, tree recursion and cut-vertex
// splitting; only 2-connected blocks fall back to the oracle (subject to cap).
CountResult smart_count(const Graph& g, const OracleOptions& opt = {});
// (N(g), N(g)_root) by the same decomposition.
IdentifiedCount smart_count_rooted(const Graph& g, Vertex root, const OracleOptions& opt = {});

}  // namespace connsets
