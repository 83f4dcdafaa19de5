#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "connsets/graph.hpp"

namespace connsets {

struct TransformOutcome {
  Graph result;
  // N(result) - N(input) from the gluing identities, where one applies.
  std::optional<std::int64_t> predicted_delta;
  std::string applied;                // the surgery site, human readable
  std::optional<std::string> family;  // named family the result is isomorphic to
  bool identity = false;              // already in target shape; result == input
};

// Replace a chordless cycle C_q (q >= 4) that meets the rest of g only at
// `anchor` with the tadpole D_q glued at its pendant vertex. Vertex ids are
// kept: walking the cycle from the anchor, the first q - 2 vertices become
// the tail and the last three the triangle.
TransformOutcome cycle_to_tadpole(const Graph& g, VertexSet cycle_vertices, Vertex anchor);

// Replace the tree attached at core vertex `attachment_root` (per
// extract_core) by a star of the same order centred there.
TransformOutcome subtree_to_star(const Graph& g, Vertex attachment_root);

// H = g - (keep_cycle \ {anchor}) must be connected, unicyclic and have at
// least 5 vertices; it is replaced by Q_|H| whose universal vertex is the
// anchor. The extra edge joins the two smallest non-anchor ids of H.
TransformOutcome part_to_Q(const Graph& g, VertexSet keep_cycle, Vertex anchor);

struct BranchShift {
  Graph glued;         // l = u, r = v
  Graph both_at_u;     // l = r = u
  Graph both_at_v;     // l = r = v
  std::int64_t delta_u = 0;  // N(both_at_u) - N(glued), from the part counts
  std::int64_t delta_v = 0;  // N(both_at_v) - N(glued)
};

// Glue connected graphs L, M, R (each with >= 2 vertices) as above. Vertex
// layout in every result: M first, then L without l, then R without r.
BranchShift branch_shift(const Graph& left, Vertex l, const Graph& middle, Vertex u, Vertex v, const Graph& right,
                         Vertex r);

}  // namespace connsets
