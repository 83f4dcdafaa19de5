#include <doctest.h>

#include <random>

#include "connsets/bicyclic.hpp"
#include "connsets/counting.hpp"
#include "connsets/errors.hpp"
#include "connsets/families.hpp"
#include "oracles.hpp"

using namespace connsets;

namespace {

Graph fam(const FamilySpec& s) { return build(s); }

Count total(const Graph& g) { return oracle_count(g).total; }

Count component_sum(const Graph& g) {
  Count sum = 0;
  for (VertexSet block : components(g, g.vertices())) sum += total(induced_subgraph(g, block).graph);
  return sum;
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("oracle counts of small graphs") {
  CHECK(total(fam(family::Path{4})) == 10);
  CHECK(total(fam(family::Cycle{5})) == 21);
  CHECK(total(Graph(1, {})) == 1);
  CHECK(total(fam(family::E{family::Named::A4})) == 14);
  CHECK(oracle_count(fam(family::Path{4})).method == CountMethod::oracle);
}

TEST_CASE("rooted and pair counts") {
  for (Vertex v = 0; v < 4; ++v) CHECK(oracle_count_rooted(fam(family::Cycle{4}), v).value == 7);
  CHECK(oracle_count_rooted(fam(family::Path{5}), 0).value == 5);
  CHECK(oracle_count_rooted(fam(family::Star{5}), 0).value == 16);
  CHECK(oracle_count_pair(fam(family::Cycle{3}), 0, 2) == 2);
  CHECK(oracle_count_pair(fam(family::Path{3}), 0, 2) == 1);
  const Graph a4 = fam(family::E{family::Named::A4});
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < 4; ++v)
    if (a4.degree(v) == 3) hubs.push_back(v);
  REQUIRE(hubs.size() == 2);
  CHECK(oracle_count_pair(a4, hubs[0], hubs[1]) == 4);
  CHECK(oracle::naive_count(a4, {hubs[0], hubs[1]}) == 4);
  CHECK_THROWS_AS(oracle_count_pair(a4, 1, 1), ContractError);
  CHECK_THROWS_AS(oracle_count_rooted(a4, 4), ContractError);
  CHECK_THROWS_AS(oracle_count_containing(a4, VertexSet{}), ContractError);
}

TEST_CASE("oracle agrees with the adjacency-matrix reference") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 150; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 11)(rng);
    Graph g = oracle::random_connected(rng, n, std::uniform_real_distribution<double>(0, 0.6)(rng));
    REQUIRE(total(g) == oracle::naive_count(g));
    const Vertex v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    REQUIRE(oracle_count_rooted(g, v).value == oracle::naive_count(g, {v}));
    if (n >= 2) {
      const Vertex u = (v + 1) % n;
      REQUIRE(oracle_count_pair(g, u, v) == oracle::naive_count(g, {u, v}));
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 20; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 18)(rng);
    Graph g = oracle::random_connected(rng, n, 0.2);
    const Count serial = oracle_count(g, {24, 1}).total;
    for (int workers : {0, 2, 3, 4}) REQUIRE(oracle_count(g, {24, workers}).total == serial);
    const Vertex v = n / 2;
    REQUIRE(oracle_count_rooted(g, v, {24, 4}).value == oracle_count_rooted(g, v, {24, 1}).value);
  }
}

TEST_CASE("deletion identities") {
  std::vector<Graph> corpus;
  for (int n = 4; n <= 9; ++n)
    for (auto& c : enumerate_bicyclic(n)) corpus.push_back(c.graph);
  std::mt19937_64 rng(303);
  for (int t = 0; t < 100; ++t) corpus.push_back(oracle::random_connected(rng, std::uniform_int_distribution<int>(2, 10)(rng), 0.3));
  for (const Graph& g : corpus) {
    const Count n_g = total(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const Graph minus_v = delete_vertices(g, VertexSet::single(v)).graph;
      REQUIRE(n_g == total(minus_v) + oracle_count_rooted(g, v).value);
      REQUIRE(total(minus_v) == component_sum(minus_v));
    }
    // Inclusion-exclusion over one pair.
    const Vertex u = 0, v = g.order() - 1;
    const Count without_u = total(delete_vertices(g, VertexSet::single(u)).graph);
    const Count without_v = total(delete_vertices(g, VertexSet::single(v)).graph);
    const Count without_both = g.order() > 2 ? total(delete_vertices(g, VertexSet::of({u, v})).graph) : 0;
    REQUIRE(oracle_count_pair(g, u, v) == n_g - without_u - without_v + without_both);
  }
}

TEST_CASE("oracle cap is enforced") {
  const Graph p = fam(family::Path{25});
  CHECK_THROWS_AS(oracle_count(p), ResourceError);
  CHECK_THROWS_AS(oracle_count_rooted(p, 0), ResourceError);
  CHECK(oracle_count(p, {25, 1}).total == 25 * 26 / 2);
  CHECK_THROWS_AS(oracle_count(fam(family::Path{10}), {8, 1}), ResourceError);
}

TEST_CASE("count invariants") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Graph g = oracle::random_connected(rng, n, 0.25);
    CHECK(total(g) >= static_cast<Count>(n));
    for (Vertex v = 0; v < n; ++v) {
      const Count r = oracle_count_rooted(g, v).value;
      CHECK(r >= 1);
      CHECK(r <= pow2(n - 1));
    }
  }
}

TEST_CASE("adding an edge never lowers the count") {
  for (int n = 4; n <= 7; ++n)
    for (auto& c : enumerate_bicyclic(n)) {
      const Graph& g = c.graph;
      const Count base = total(g);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (!g.has_edge(u, v)) {
            auto edges = g.edges();
            edges.emplace_back(u, v);
            REQUIRE(total(Graph(n, edges)) >= base);
          }
    }
}

TEST_CASE("gluing two graphs at a vertex") {
  auto two_c3 = combine_identified(7, 4, 7, 4);
  CHECK(two_c3.total == 22);
  CHECK(two_c3.rooted == 16);
  auto unit = combine_identified(31, 9, 1, 1);
  CHECK(unit.total == 31);
  CHECK(unit.rooted == 9);
  auto p3 = combine_identified(3, 2, 3, 2);
  CHECK(p3.total == 6);
  CHECK(p3.rooted == 4);
  CHECK_THROWS_AS(combine_identified(3, 4, 3, 2), ContractError);
  CHECK_THROWS_AS(combine_identified(3, 0, 3, 2), ContractError);
}

TEST_CASE("gluing matches the oracle on random pairs") {
  std::mt19937_64 rng(505);
  for (int t = 0; t < 500; ++t) {
    const int n1 = std::uniform_int_distribution<int>(1, 10)(rng);
    const int n2 = std::uniform_int_distribution<int>(1, 10)(rng);
    Graph h1 = oracle::random_connected(rng, n1, 0.3), h2 = oracle::random_connected(rng, n2, 0.3);
    const Vertex u1 = std::uniform_int_distribution<int>(0, n1 - 1)(rng);
    const Vertex u2 = std::uniform_int_distribution<int>(0, n2 - 1)(rng);
    std::vector<Edge> edges = h1.edges();
    std::vector<Vertex> map(n2);
    Vertex next = n1;
    for (Vertex x = 0; x < n2; ++x) map[x] = x == u2 ? u1 : next++;
    for (auto [a, b] : h2.edges()) edges.emplace_back(map[a], map[b]);
    Graph h(n1 + n2 - 1, edges);
    auto predicted = combine_identified(total(h1), oracle_count_rooted(h1, u1).value, total(h2),
                                        oracle_count_rooted(h2, u2).value);
    REQUIRE(predicted.total == total(h));
    REQUIRE(predicted.rooted == oracle_count_rooted(h, u1).value);
  }
}

TEST_CASE("pendant extension") {
  CHECK(extend_pendant(7, 4) == 12);
  CHECK(extend_pendant(1, 1) == 3);
  CHECK(extend_pendant(12, 5) == 18);
  CHECK(total(fam(family::Tadpole{4})) == 12);
  CHECK(total(fam(family::Tadpole{5})) == 18);
}

TEST_CASE("tree recursion") {
  CHECK(tree_rooted_count(fam(family::Star{6}), 0).value == 32);
  CHECK(tree_rooted_count(fam(family::Path{4}), 0).value == 4);
  CHECK(tree_rooted_count(Graph(1, {}), 0).value == 1);
  CHECK_THROWS_AS(tree_rooted_count(fam(family::Cycle{4}), 0), ContractError);
  CHECK_THROWS_AS(tree_count(Graph(3, {{0, 1}})), ContractError);

  for (int n = 1; n <= 9; ++n)
    for (const Graph& t : enumerate_trees(n)) {
      REQUIRE(tree_count(t) == total(t));
      for (Vertex v = 0; v < n; ++v) {
        const Count r = tree_rooted_count(t, v).value;
        REQUIRE(r == oracle_count_rooted(t, v).value);
        REQUIRE(r <= pow2(n - 1));
        REQUIRE((r == pow2(n - 1)) == (t.degree(v) == n - 1));
      }
    }
}

TEST_CASE("decomposition counting") {
  CHECK(smart_count(fam(family::Ln{10})).total == 72);
  CHECK(smart_count(fam(family::Bn{10})).total == 524);
  CHECK(smart_count(fam(family::E{family::Named::E8})).total == 100);
  CHECK(smart_count(fam(family::Cycle{40})).method == CountMethod::closed_form);
  CHECK(smart_count(fam(family::Cycle{40})).total == 40 * 40 - 40 + 1);
  CHECK(smart_count(fam(family::Ln{40})).total == 46 * 39 / 2);
  CHECK_THROWS_AS(smart_count(Graph(3, {{0, 1}})), ContractError);

  for (int n = 4; n <= 9; ++n)
    for (auto& c : enumerate_bicyclic(n)) {
      REQUIRE(smart_count(c.graph).total == total(c.graph));
      const Vertex v = n - 1;
      auto sr = smart_count_rooted(c.graph, v);
      REQUIRE(sr.rooted == oracle_count_rooted(c.graph, v).value);
    }
  std::mt19937_64 rng(606);
  for (int t = 0; t < 300; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Graph g = oracle::random_connected(rng, n, std::uniform_real_distribution<double>(0, 0.4)(rng));
    REQUIRE(smart_count(g).total == total(g));
    const Vertex v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    REQUIRE(smart_count_rooted(g, v).rooted == oracle_count_rooted(g, v).value);
  }
}

TEST_CASE("checked arithmetic") {
  CHECK(pow2(63) == (Count{1} << 63));
  CHECK_THROWS_AS(checked_mul(pow2(40), pow2(30)), OverflowError);
  CHECK_THROWS_AS(checked_add(UINT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_sub(1, 2), OverflowError);
  CHECK(checked_mul(3, 5) == 15);
}

}  // TEST_SUITE
