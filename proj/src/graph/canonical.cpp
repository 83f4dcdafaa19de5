#include "connsets/canonical.hpp"

#include <algorithm>
#include <optional>

#include "connsets/graph_io.hpp"

namespace connsets {

namespace {

// Ordered partition of the vertex set. cells[i] lists members of cell i;
// cell order, not member order, carries the invariant information.
using Partition = std::vector<std::vector<Vertex>>;

// Split cells by neighbour counts into every cell until stable. Splits depend
// only on cell indices and adjacency, so the result commutes with relabeling.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<VertexSet> masks(p.size());
    for (std::size_t c = 0; c < p.size(); ++c)
      for (Vertex v : p[c]) masks[c].insert(v);

    Partition next;
    next.reserve(g.order());
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<int> sig(p.size());
        for (std::size_t c = 0; c < p.size(); ++c) sig[c] = (g.neighbors(v) & masks[c]).size();
        keyed.emplace_back(std::move(sig), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t start = next.size();
      next.push_back({keyed[0].second});
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) next.push_back({});
        next.back().push_back(keyed[i].second);
      }
      if (next.size() - start > 1) changed = true;
    }
    p = std::move(next);
  }
}

// Relabeled adjacency rows for a discrete partition; compared lexicographically.
std::vector<std::uint64_t> encode(const Graph& g, const Partition& p, std::vector<Vertex>& pos) {
  pos.assign(g.order(), 0);
  for (std::size_t c = 0; c < p.size(); ++c) pos[p[c][0]] = static_cast<Vertex>(c);
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) rows[pos[v]] |= std::uint64_t{1} << pos[u];
  return rows;
}

bool twins(const Graph& g, Vertex a, Vertex b) {
  VertexSet na = g.neighbors(a), nb = g.neighbors(b);
  na.erase(b);
  nb.erase(a);
  return na == nb;
}

struct Search {
  const Graph& g;
  std::optional<std::vector<std::uint64_t>> best;
  std::vector<Vertex> best_pos;

  void run(Partition p) {
    refine(g, p);
    auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (target == p.end()) {
      std::vector<Vertex> pos;
      auto rows = encode(g, p, pos);
      if (!best || rows < *best) {
        best = std::move(rows);
        best_pos = std::move(pos);
      }
      return;
    }
    const std::size_t ti = static_cast<std::size_t>(target - p.begin());
    const std::vector<Vertex> cell = *target;
    // Swapping two twins in the same cell is an automorphism fixing the
    // partition, so their subtrees yield identical leaves.
    std::vector<Vertex> branches;
    for (Vertex v : cell) {
      bool covered = std::any_of(branches.begin(), branches.end(),
                                 [&](Vertex b) { return twins(g, v, b); });
      if (!covered) branches.push_back(v);
    }
    for (Vertex v : branches) {
      Partition child;
      child.reserve(p.size() + 1);
      child.insert(child.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(ti));
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : cell)
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      child.insert(child.end(), p.begin() + static_cast<std::ptrdiff_t>(ti) + 1, p.end());
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  // Seed with degree classes in increasing degree order.
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  Partition p;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || g.degree(order[i]) != g.degree(order[i - 1])) p.push_back({});
    p.back().push_back(order[i]);
  }
  Search s{g, std::nullopt, {}};
  s.run(std::move(p));
  return s.best_pos;
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)).with_label(g.label()); }

Certificate canonical_certificate(const Graph& g) {
  return Certificate{to_graph6(relabel(g, canonical_labeling(g))), g.order(), g.size()};
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_certificate(g) == canonical_certificate(h);
}

}  // namespace connsets
