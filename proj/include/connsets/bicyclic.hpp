#pragma once

#include <string>
#include <variant>
#include <vector>

#include "connsets/canonical.hpp"
#include "connsets/families.hpp"
#include "connsets/graph.hpp"

namespace connsets {

// ---- rooted and free trees -------------------------------------------------

// Canonical level sequences (root at depth 0) of every rooted tree on k
// vertices, each isomorphism class once, in reverse lexicographic order.
std::vector<std::vector<int>> rooted_level_sequences(int k);
// Vertex i's parent is the last j < i one level up; vertex 0 is the root.
Graph tree_from_levels(const std::vector<int>& levels);
// All free trees on n vertices (1 <= n <= 10), sorted by certificate.
std::vector<Graph> enumerate_trees(int n);

// ---- core decomposition ------------------------------------------------------

namespace core_kind {
struct TypeI { int p, q, r; };    // cycles p <= q joined by a path on r >= 2 vertices
struct TypeII { int p, q; };      // cycles p <= q sharing one vertex
struct TypeIII { int a, b, c; };  // theta, a <= b <= c
}  // namespace core_kind

using CoreKind = std::variant<core_kind::TypeI, core_kind::TypeII, core_kind::TypeIII>;

std::string to_string(const CoreKind& kind);
FamilySpec to_family(const CoreKind& kind);

// Tree hanging off one core vertex. tree.vertex `root` is the core vertex.
struct Attachment {
  Vertex at = 0;  // id in the parent graph
  Graph tree;
  Vertex root = 0;
  std::vector<Vertex> to_parent;
};

struct CoreClassification {
  Graph core;
  std::vector<Vertex> core_to_parent;
  CoreKind kind;
  std::vector<Attachment> attachments;  // nontrivial ones only, by `at`
};

// Strip pendant vertices until none remain and classify the residue.
// Throws ContractError unless g is connected with e = n + 1.
CoreClassification extract_core(const Graph& g);
// Core vertices first (in core order), then each attachment's other vertices.
Graph reassemble(const CoreClassification& c);

// ---- exhaustive generation --------------------------------------------------

struct EnumerationOptions {
  int cap = 11;
  int workers = 1;  // 1: serial; 0: OpenMP default; k: k threads
};

struct BicyclicClass {
  Certificate certificate;
  Graph graph;  // canonical representative
};

std::vector<FamilySpec> bicyclic_core_specs(int max_order);
// One graph per isomorphism class of n-vertex bicyclic graphs, sorted by
// certificate. Cores are generated by kind, then every distribution of
// rooted trees over the core vertices, deduplicated by certificate.
std::vector<BicyclicClass> enumerate_bicyclic(int n, const EnumerationOptions& opt = {});

namespace crosscheck {
// Every labeled connected graph on n vertices with n + 1 edges whose degree
// sequence is non-increasing in vertex id (each class has such a labeling),
// canonicalized and deduplicated. Independent of the core-based generator.
std::vector<Certificate> labeled_bicyclic_certificates(int n, int cap = 8);
}  // namespace crosscheck

}  // namespace connsets
