#include <algorithm>
#include <map>

#include "connsets/bicyclic.hpp"
#include "connsets/errors.hpp"

namespace connsets {

using namespace core_kind;

std::string to_string(const CoreKind& kind) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, TypeI>)
          return "TypeI{" + std::to_string(k.p) + "," + std::to_string(k.q) + "," + std::to_string(k.r) + "}";
        else if constexpr (std::is_same_v<K, TypeII>)
          return "TypeII{" + std::to_string(k.p) + "," + std::to_string(k.q) + "}";
        else
          return "TypeIII{" + std::to_string(k.a) + "," + std::to_string(k.b) + "," + std::to_string(k.c) + "}";
      },
      kind);
}

FamilySpec to_family(const CoreKind& kind) {
  return std::visit(
      [](const auto& k) -> FamilySpec {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, TypeI>)
          return family::Dumbbell{k.p, k.q, k.r};
        else if constexpr (std::is_same_v<K, TypeII>)
          return family::TypeII{k.p, k.q};
        else
          return family::Theta{k.a, k.b, k.c};
      },
      kind);
}

namespace {

// Follow degree-2 vertices from hub `from` through `first` until the next
// vertex of degree >= 3. Returns that hub and the vertex count of the walk,
// both ends included (a closed walk counts `from` twice).
std::pair<Vertex, int> walk(const Graph& g, Vertex from, Vertex first) {
  Vertex prev = from, cur = first;
  int count = 2;
  while (g.degree(cur) == 2) {
    VertexSet next = g.neighbors(cur) - VertexSet::single(prev);
    prev = cur;
    cur = next.first();
    ++count;
  }
  return {cur, count};
}

CoreKind classify(const Graph& core) {
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < core.order(); ++v)
    if (core.degree(v) > 2) hubs.push_back(v);

  if (hubs.size() == 1) {
    if (core.degree(hubs[0]) != 4) throw ContractError("extract_core: unexpected core degree sequence");
    auto parts = components(core, core.vertices() - VertexSet::single(hubs[0]));
    if (parts.size() != 2) throw ContractError("extract_core: degree-4 core vertex is not a cut vertex");
    int p = parts[0].size() + 1, q = parts[1].size() + 1;
    return TypeII{std::min(p, q), std::max(p, q)};
  }
  if (hubs.size() != 2 || core.degree(hubs[0]) != 3 || core.degree(hubs[1]) != 3)
    throw ContractError("extract_core: unexpected core degree sequence");

  const Vertex x = hubs[0], y = hubs[1];
  if (cut_vertices(core).empty()) {
    std::vector<int> len;
    for (Vertex w : core.neighbors(x)) len.push_back(walk(core, x, w).second);
    std::sort(len.begin(), len.end());
    return TypeIII{len[0], len[1], len[2]};
  }
  int p = 0, q = 0, r = 0;
  for (Vertex w : core.neighbors(x)) {
    auto [end, count] = walk(core, x, w);
    if (end == y) r = count;
    else p = count - 1;  // seen twice, once per direction
  }
  for (Vertex w : core.neighbors(y)) {
    auto [end, count] = walk(core, y, w);
    if (end == y) q = count - 1;
  }
  return TypeI{std::min(p, q), std::max(p, q), r};
}

}  // namespace

CoreClassification extract_core(const Graph& g) {
  if (!is_bicyclic(g))
    throw ContractError("extract_core: graph with n=" + std::to_string(g.order()) + ", e=" + std::to_string(g.size()) +
                        " is not bicyclic (need connected, e = n + 1)");
  VertexSet alive = g.vertices();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (Vertex v : alive) {
      if ((g.neighbors(v) & alive).size() == 1) {
        alive.erase(v);
        stripped = true;
      }
    }
  }

  Subgraph core = induced_subgraph(g, alive);
  CoreClassification out{core.graph, core.to_parent, classify(core.graph), {}};

  // Each component of g - core hangs off exactly one core vertex.
  std::map<Vertex, VertexSet> hanging;
  for (VertexSet block : components(g, g.vertices() - alive)) {
    VertexSet touch;
    for (Vertex v : block) touch |= g.neighbors(v) & alive;
    if (touch.size() != 1) throw ContractError("extract_core: tree attached at more than one core vertex");
    hanging[touch.first()] |= block;
  }
  for (auto& [at, block] : hanging) {
    Subgraph t = induced_subgraph(g, block | VertexSet::single(at));
    Vertex root = static_cast<Vertex>(std::find(t.to_parent.begin(), t.to_parent.end(), at) - t.to_parent.begin());
    out.attachments.push_back({at, t.graph, root, t.to_parent});
  }
  return out;
}

Graph reassemble(const CoreClassification& c) {
  std::vector<Edge> edges = c.core.edges();
  std::map<Vertex, Vertex> core_index;
  for (std::size_t i = 0; i < c.core_to_parent.size(); ++i) core_index[c.core_to_parent[i]] = static_cast<Vertex>(i);
  int next = c.core.order();
  for (const auto& a : c.attachments) {
    std::vector<Vertex> local(a.tree.order());
    for (Vertex v = 0; v < a.tree.order(); ++v) local[v] = v == a.root ? core_index.at(a.at) : next++;
    for (auto [u, v] : a.tree.edges()) edges.emplace_back(local[u], local[v]);
  }
  return Graph(next, edges);
}

}  // namespace connsets
