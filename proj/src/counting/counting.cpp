#include "connsets/counting.hpp"

#include <functional>

#include "connsets/errors.hpp"
#include "connsets/oracle_kernels.hpp"

namespace connsets {

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count addition overflows 64 bits");
  return r;
}

Count checked_sub(Count a, Count b) {
  if (b > a) throw OverflowError("count subtraction underflows");
  return a - b;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count multiplication overflows 64 bits");
  return r;
}

Count pow2(int k) {
  if (k < 0 || k > 63) throw OverflowError("2^" + std::to_string(k) + " is outside the count range");
  return Count{1} << k;
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::oracle: return "oracle";
    case CountMethod::decomposition: return "decomposition";
    case CountMethod::closed_form: return "closed_form";
  }
  return "unknown";
}

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.order())
    throw ContractError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

Count run_kernel(const Graph& g, VertexSet required, const OracleOptions& opt) {
  const int free_bits = g.order() - required.size();
  if (g.order() > opt.cap)
    throw ResourceError("oracle: n=" + std::to_string(g.order()) + " exceeds the oracle cap of " +
                        std::to_string(opt.cap));
  if (free_bits > 62) throw ResourceError("oracle: more than 62 free vertices cannot be enumerated");
  const auto pg = kernels::pack(g, required);
  return opt.workers == 1 ? kernels::count_connected_serial(pg) : kernels::count_connected_omp(pg, opt.workers);
}

}  // namespace

CountResult oracle_count(const Graph& g, const OracleOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Count total = run_kernel(g, VertexSet{}, opt);
  return {total, CountMethod::oracle, std::chrono::steady_clock::now() - start};
}

RootedCount oracle_count_rooted(const Graph& g, Vertex v, const OracleOptions& opt) {
  check_vertex(g, v, "oracle_count_rooted");
  return {v, run_kernel(g, VertexSet::single(v), opt)};
}

Count oracle_count_pair(const Graph& g, Vertex u, Vertex v, const OracleOptions& opt) {
  check_vertex(g, u, "oracle_count_pair");
  check_vertex(g, v, "oracle_count_pair");
  if (u == v) throw ContractError("oracle_count_pair: u and v must differ");
  return run_kernel(g, VertexSet::single(u) | VertexSet::single(v), opt);
}

Count oracle_count_containing(const Graph& g, VertexSet required, const OracleOptions& opt) {
  if (required.empty()) throw ContractError("oracle_count_containing: required set must be nonempty");
  if (!required.subset_of(g.vertices())) throw ContractError("oracle_count_containing: set out of range");
  return run_kernel(g, required, opt);
}

IdentifiedCount combine_identified(Count total1, Count rooted1, Count total2, Count rooted2) {
  if (rooted1 == 0 || rooted2 == 0 || rooted1 > total1 || rooted2 > total2)
    throw ContractError("combine_identified: need 1 <= rooted <= total on both sides");
  Count cross = checked_mul(rooted1 - 1, rooted2 - 1);
  Count total = checked_add(checked_add(total1, total2 - 1), cross);
  return {total, checked_mul(rooted1, rooted2)};
}

Count extend_pendant(Count total, Count rooted_neighbor) {
  if (total == 0 || rooted_neighbor == 0 || rooted_neighbor > total)
    throw ContractError("extend_pendant: need 1 <= rooted_neighbor <= total");
  return checked_add(checked_add(total, 1), rooted_neighbor);
}

namespace {

// Calls visit(v, f(v)) for every vertex, where f(v) counts connected sets
// whose vertex closest to `root` is v.
void tree_down_counts(const Graph& t, Vertex root, const std::function<void(Vertex, Count)>& visit) {
  std::function<Count(Vertex, Vertex)> down = [&](Vertex v, Vertex parent) {
    Count product = 1;
    for (Vertex c : t.neighbors(v))
      if (c != parent) product = checked_mul(product, checked_add(1, down(c, v)));
    visit(v, product);
    return product;
  };
  down(root, -1);
}

}  // namespace

RootedCount tree_rooted_count(const Graph& t, Vertex v) {
  check_vertex(t, v, "tree_rooted_count");
  if (!is_tree(t)) throw ContractError("tree_rooted_count: input is not a tree");
  Count at_root = 0;
  tree_down_counts(t, v, [&](Vertex w, Count f) {
    if (w == v) at_root = f;
  });
  return {v, at_root};
}

Count tree_count(const Graph& t) {
  if (!is_tree(t)) throw ContractError("tree_count: input is not a tree");
  Count total = 0;
  tree_down_counts(t, 0, [&](Vertex, Count f) { total = checked_add(total, f); });
  return total;
}

}  // namespace connsets
