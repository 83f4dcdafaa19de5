#include <algorithm>
#include <optional>

#include "connsets/counting.hpp"
#include "connsets/errors.hpp"

namespace connsets {

namespace {

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

Count binom2(Count n) { return n * (n - 1) / 2; }

// Path, star and cycle closed forms.
std::optional<Count> shape_formula(const Graph& g) {
  const Count n = static_cast<Count>(g.order());
  if (is_tree(g)) {
    if (max_degree(g) <= 2) return n * (n + 1) / 2;
    if (max_degree(g) == g.order() - 1) return checked_add(pow2(g.order() - 1), n - 1);
    return std::nullopt;
  }
  if (is_cycle(g)) return n * n - n + 1;
  return std::nullopt;
}

// Cut vertex whose smallest side (component of g - u) is largest; ties by id.
std::optional<Vertex> best_cut_vertex(const Graph& g) {
  std::optional<Vertex> best;
  int best_side = -1;
  for (Vertex u : cut_vertices(g)) {
    int smallest = g.order();
    for (VertexSet block : components(g, g.vertices() - VertexSet::single(u)))
      smallest = std::min(smallest, block.size());
    if (smallest > best_side) {
      best_side = smallest;
      best = u;
    }
  }
  return best;
}

class Decomposer {
 public:
  explicit Decomposer(const OracleOptions& opt) : opt_(opt) {}

  Count total(const Graph& g, CountMethod* route = nullptr) {
    auto note = [&](CountMethod m) {
      if (route) *route = m;
    };
    if (g.order() == 1) {
      note(CountMethod::closed_form);
      return 1;
    }
    if (auto f = shape_formula(g)) {
      note(CountMethod::closed_form);
      return *f;
    }
    note(CountMethod::decomposition);
    if (is_tree(g)) return tree_count(g);
    if (auto u = best_cut_vertex(g)) return split_at(g, *u).total;
    note(CountMethod::oracle);
    return oracle_count(g, opt_).total;
  }

  // Sum over components; g may be disconnected.
  Count total_any(const Graph& g) {
    Count sum = 0;
    for (VertexSet block : components(g, g.vertices()))
      sum = checked_add(sum, total(induced_subgraph(g, block).graph));
    return sum;
  }

  IdentifiedCount rooted(const Graph& g, Vertex root) {
    if (g.order() == 1) return {1, 1};
    if (is_tree(g)) return {total(g), tree_rooted_count(g, root).value};
    if (is_cycle(g)) {
      Count n = static_cast<Count>(g.order());
      return {n * n - n + 1, 1 + binom2(n)};
    }
    VertexSet cuts = cut_vertices(g);
    if (cuts.empty()) return {oracle_count(g, opt_).total, oracle_count_rooted(g, root, opt_).value};
    if (cuts.contains(root)) return split_at(g, root);
    Count all = total(g);
    Count without = total_any(delete_vertices(g, VertexSet::single(root)).graph);
    return {all, checked_sub(all, without)};
  }

 private:
  // Fold the parts {u} + component over N and N_u with the identification rule.
  IdentifiedCount split_at(const Graph& g, Vertex u) {
    std::optional<IdentifiedCount> acc;
    for (VertexSet block : components(g, g.vertices() - VertexSet::single(u))) {
      Subgraph part = induced_subgraph(g, block | VertexSet::single(u));
      Vertex local = static_cast<Vertex>(
          std::find(part.to_parent.begin(), part.to_parent.end(), u) - part.to_parent.begin());
      IdentifiedCount piece = rooted(part.graph, local);
      acc = acc ? combine_identified(acc->total, acc->rooted, piece.total, piece.rooted) : piece;
    }
    return *acc;
  }

  OracleOptions opt_;
};

}  // namespace

CountResult smart_count(const Graph& g, const OracleOptions& opt) {
  if (!is_connected(g))
    throw ContractError("smart_count: graph is disconnected; count each component and sum");
  const auto start = std::chrono::steady_clock::now();
  CountResult r;
  r.total = Decomposer(opt).total(g, &r.method);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

IdentifiedCount smart_count_rooted(const Graph& g, Vertex root, const OracleOptions& opt) {
  if (root < 0 || root >= g.order()) throw ContractError("smart_count_rooted: root out of range");
  if (!is_connected(g))
    throw ContractError("smart_count_rooted: graph is disconnected; count each component and sum");
  return Decomposer(opt).rooted(g, root);
}

}  // namespace connsets
