#include "connsets/transforms.hpp"

#include <algorithm>

#include "connsets/counting.hpp"
#include "connsets/errors.hpp"
#include "connsets/families.hpp"

namespace connsets {

namespace {

std::int64_t to_signed(Count c) {
  if (c > static_cast<Count>(INT64_MAX)) throw OverflowError("count exceeds the signed delta range");
  return static_cast<std::int64_t>(c);
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("delta multiplication overflows");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("delta addition overflows");
  return r;
}

Vertex local_index(const Subgraph& s, Vertex parent) {
  return static_cast<Vertex>(std::find(s.to_parent.begin(), s.to_parent.end(), parent) - s.to_parent.begin());
}

// Members of a chordless cycle through `anchor`, in walking order from it.
// Every member other than the anchor must have degree 2 in g.
std::vector<Vertex> hanging_cycle_order(const Graph& g, VertexSet cycle, Vertex anchor, const char* op) {
  const std::string name(op);
  if (!is_connected(g)) throw ContractError(name + ": graph must be connected");
  if (!cycle.subset_of(g.vertices())) throw ContractError(name + ": cycle vertices out of range");
  if (anchor < 0 || anchor >= g.order() || !cycle.contains(anchor))
    throw ContractError(name + ": anchor must belong to the cycle");
  for (Vertex c : cycle) {
    if ((g.neighbors(c) & cycle).size() != 2)
      throw ContractError(name + ": " + cycle.to_string() + " does not induce a chordless cycle");
    if (c != anchor && g.degree(c) != 2)
      throw ContractError(name + ": cycle vertex " + std::to_string(c) + " meets the rest of the graph");
  }
  if (!induced_is_connected(g, cycle))
    throw ContractError(name + ": " + cycle.to_string() + " does not induce a single cycle");

  std::vector<Vertex> order{anchor};
  Vertex prev = anchor, cur = (g.neighbors(anchor) & cycle).first();
  while (cur != anchor) {
    order.push_back(cur);
    Vertex next = ((g.neighbors(cur) & cycle) - VertexSet::single(prev)).first();
    prev = cur;
    cur = next;
  }
  return order;
}

// Edges of g with at least one endpoint outside `region`.
std::vector<Edge> edges_outside(const Graph& g, VertexSet region) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges())
    if (!(region.contains(u) && region.contains(v))) out.emplace_back(u, v);
  return out;
}

VertexSet pendant_free_core(const Graph& g) {
  VertexSet alive = g.vertices();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (Vertex v : alive)
      if ((g.neighbors(v) & alive).size() <= 1 && alive.size() > 1) {
        alive.erase(v);
        stripped = true;
      }
  }
  return alive;
}

Count cycle_total(Count q) { return q * q - q + 1; }
Count cycle_rooted(Count q) { return 1 + q * (q - 1) / 2; }

void annotate(TransformOutcome& out) { out.family = identify_family(out.result); }

}  // namespace

TransformOutcome cycle_to_tadpole(const Graph& g, VertexSet cycle_vertices, Vertex anchor) {
  const int q = cycle_vertices.size();
  if (q < 4) throw ContractError("cycle_to_tadpole: cycle must have at least 4 vertices (got " + std::to_string(q) + ")");
  auto order = hanging_cycle_order(g, cycle_vertices, anchor, "cycle_to_tadpole");

  std::vector<Edge> edges = edges_outside(g, cycle_vertices);
  for (int i = 0; i + 1 <= q - 3; ++i) edges.emplace_back(order[i], order[i + 1]);
  edges.emplace_back(order[q - 3], order[q - 2]);
  edges.emplace_back(order[q - 2], order[q - 1]);
  edges.emplace_back(order[q - 1], order[q - 3]);

  // Both shapes are glued to rest = g - (cycle \ anchor) at the anchor.
  Subgraph rest = delete_vertices(g, cycle_vertices - VertexSet::single(anchor));
  IdentifiedCount r = smart_count_rooted(rest.graph, local_index(rest, anchor));
  const Count qq = static_cast<Count>(q);
  const std::int64_t tadpole_total = to_signed((qq - 1) * (qq + 4) / 2), tadpole_rooted = q + 1;
  std::int64_t delta = add(tadpole_total - to_signed(cycle_total(qq)),
                           mul(tadpole_rooted - to_signed(cycle_rooted(qq)), to_signed(r.rooted) - 1));

  TransformOutcome out{Graph(g.order(), edges), delta,
                       "C" + std::to_string(q) + " " + cycle_vertices.to_string() + " at anchor " +
                           std::to_string(anchor) + " -> D" + std::to_string(q),
                       std::nullopt, false};
  annotate(out);
  return out;
}

TransformOutcome subtree_to_star(const Graph& g, Vertex attachment_root) {
  if (attachment_root < 0 || attachment_root >= g.order())
    throw ContractError("subtree_to_star: root out of range");
  if (!is_connected(g)) throw ContractError("subtree_to_star: graph must be connected");
  const VertexSet core = pendant_free_core(g);
  if (core.size() < 3) throw ContractError("subtree_to_star: graph has no cycle, so no core to attach to");
  if (!core.contains(attachment_root))
    throw ContractError("subtree_to_star: vertex " + std::to_string(attachment_root) + " is not a core vertex");

  VertexSet tree = VertexSet::single(attachment_root);
  for (VertexSet block : components(g, g.vertices() - core))
    for (Vertex v : block)
      if (g.has_edge(v, attachment_root)) {
        tree |= block;
        break;
      }
  const int k = tree.size();
  if (k == 1)
    throw ContractError("subtree_to_star: no nontrivial tree is attached at vertex " + std::to_string(attachment_root));

  const std::string site = "tree " + tree.to_string() + " at " + std::to_string(attachment_root);
  const VertexSet others = tree - VertexSet::single(attachment_root);
  if ((g.neighbors(attachment_root) & tree) == others) {
    TransformOutcome out{g, 0, site + " is already a star centred at the root", std::nullopt, true};
    annotate(out);
    return out;
  }

  std::vector<Edge> edges = edges_outside(g, tree);
  for (Vertex w : others) edges.emplace_back(attachment_root, w);

  Subgraph t = induced_subgraph(g, tree);
  const Vertex t_root = local_index(t, attachment_root);
  Subgraph rest = delete_vertices(g, others);
  IdentifiedCount r = smart_count_rooted(rest.graph, local_index(rest, attachment_root));
  const std::int64_t star_total = to_signed(checked_add(pow2(k - 1), static_cast<Count>(k - 1)));
  const std::int64_t star_rooted = to_signed(pow2(k - 1));
  std::int64_t delta = add(star_total - to_signed(tree_count(t.graph)),
                           mul(star_rooted - to_signed(tree_rooted_count(t.graph, t_root).value),
                               to_signed(r.rooted) - 1));

  TransformOutcome out{Graph(g.order(), edges), delta, site + " -> S" + std::to_string(k), std::nullopt, false};
  annotate(out);
  return out;
}

TransformOutcome part_to_Q(const Graph& g, VertexSet keep_cycle, Vertex anchor) {
  hanging_cycle_order(g, keep_cycle, anchor, "part_to_Q");
  const VertexSet part = g.vertices() - (keep_cycle - VertexSet::single(anchor));
  const int h = part.size();
  if (h < 5) throw ContractError("part_to_Q: the replaced part has " + std::to_string(h) + " vertices, need at least 5");
  Subgraph hs = induced_subgraph(g, part);
  if (!is_connected(hs.graph) || hs.graph.size() != h)
    throw ContractError("part_to_Q: the replaced part must be connected and unicyclic");

  const std::string site = "part " + part.to_string() + " at anchor " + std::to_string(anchor);
  const VertexSet others = part - VertexSet::single(anchor);
  if ((g.neighbors(anchor) & part) == others) {
    TransformOutcome out{g, 0, site + " is already Q" + std::to_string(h) + " with universal anchor", std::nullopt,
                         true};
    annotate(out);
    return out;
  }

  std::vector<Edge> edges = edges_outside(g, part);
  for (Vertex w : others) edges.emplace_back(anchor, w);
  std::vector<Vertex> rest_ids = others.to_vector();
  edges.emplace_back(rest_ids[0], rest_ids[1]);

  IdentifiedCount old_part = smart_count_rooted(hs.graph, local_index(hs, anchor));
  Graph q_graph = build(family::Qn{h});
  const Count p = static_cast<Count>(keep_cycle.size());
  std::int64_t delta = add(to_signed(smart_count(q_graph).total) - to_signed(old_part.total),
                           mul(to_signed(pow2(h - 1)) - to_signed(old_part.rooted), to_signed(cycle_rooted(p)) - 1));

  TransformOutcome out{Graph(g.order(), edges), delta, site + " -> Q" + std::to_string(h), std::nullopt, false};
  annotate(out);
  return out;
}

BranchShift branch_shift(const Graph& left, Vertex l, const Graph& middle, Vertex u, Vertex v, const Graph& right,
                         Vertex r) {
  for (const Graph* part : {&left, &middle, &right}) {
    if (part->order() < 2) throw ContractError("branch_shift: L, M and R must be non-trivial (at least 2 vertices)");
    if (!is_connected(*part)) throw ContractError("branch_shift: L, M and R must be connected");
  }
  auto in = [](const Graph& g, Vertex x) { return x >= 0 && x < g.order(); };
  if (!in(left, l) || !in(right, r) || !in(middle, u) || !in(middle, v))
    throw ContractError("branch_shift: gluing vertex out of range");
  if (u == v) throw ContractError("branch_shift: u and v must differ");
  const int n = left.order() + middle.order() + right.order() - 2;
  if (n > kMaxVertices) throw ContractError("branch_shift: glued graph exceeds 64 vertices");

  auto glue = [&](Vertex l_to, Vertex r_to) {
    std::vector<Edge> edges = middle.edges();
    Vertex next = middle.order();
    std::vector<Vertex> lmap(left.order()), rmap(right.order());
    for (Vertex x = 0; x < left.order(); ++x) lmap[x] = x == l ? l_to : next++;
    for (Vertex x = 0; x < right.order(); ++x) rmap[x] = x == r ? r_to : next++;
    for (auto [a, b] : left.edges()) edges.emplace_back(lmap[a], lmap[b]);
    for (auto [a, b] : right.edges()) edges.emplace_back(rmap[a], rmap[b]);
    return Graph(n, edges);
  };

  const std::int64_t nl = to_signed(oracle_count_rooted(left, l).value);
  const std::int64_t nr = to_signed(oracle_count_rooted(right, r).value);
  Subgraph m_minus_v = delete_vertices(middle, VertexSet::single(v));
  Subgraph m_minus_u = delete_vertices(middle, VertexSet::single(u));
  const std::int64_t mv_u = to_signed(oracle_count_rooted(m_minus_v.graph, local_index(m_minus_v, u)).value);
  const std::int64_t mu_v = to_signed(oracle_count_rooted(m_minus_u.graph, local_index(m_minus_u, v)).value);

  BranchShift out{glue(u, v), glue(u, u), glue(v, v), 0, 0};
  out.delta_u = mul(nr - 1, add(mul(nl, mv_u), -mu_v));
  out.delta_v = mul(nl - 1, add(mul(nr, mu_v), -mv_u));
  return out;
}

}  // namespace connsets
