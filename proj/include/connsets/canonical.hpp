#pragma once

#include <compare>
#include <string>
#include <vector>

#include "connsets/graph.hpp"

namespace connsets {

// Labeling-invariant encoding of an isomorphism class. The bytes are the
// graph6 string of the canonically relabeled graph, so a certificate can be
// decoded back into a representative.
struct Certificate {
  std::string bytes;
  int order = 0;
  int edges = 0;

  auto operator<=>(const Certificate& o) const { return bytes <=> o.bytes; }
  bool operator==(const Certificate& o) const { return bytes == o.bytes; }
};

// perm[v] = canonical position of vertex v.
std::vector<Vertex> canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
Certificate canonical_certificate(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace connsets
