#include <doctest.h>

#include <random>

#include "connsets/bicyclic.hpp"
#include "connsets/canonical.hpp"
#include "connsets/errors.hpp"
#include "connsets/families.hpp"
#include "connsets/graph.hpp"
#include "connsets/graph_io.hpp"
#include "oracles.hpp"

using namespace connsets;

namespace {

Graph path(int n) { return build(family::Path{n}); }
Graph cycle(int n) { return build(family::Cycle{n}); }
Graph bowtie() { return build(family::TypeII{3, 3}); }

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("graph construction rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ContractError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ContractError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ContractError);
  CHECK_THROWS_AS(Graph(65, {}), ContractError);
  Graph g(4, {{2, 1}, {0, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("vertex sets") {
  VertexSet s = VertexSet::of({0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.first() == 0);
  CHECK(s.to_string() == "{0,2,5}");
  CHECK(s.to_vector() == std::vector<Vertex>{0, 2, 5});
  CHECK((s - VertexSet::single(0)).first() == 2);
  CHECK(VertexSet::prefix(64).size() == 64);
  int seen = 0;
  for (Vertex v : VertexSet::prefix(5)) seen += v;
  CHECK(seen == 10);
}

TEST_CASE("induced connectivity") {
  const Graph c4 = cycle(4);
  CHECK_FALSE(induced_is_connected(c4, VertexSet::of({0, 2})));
  CHECK(induced_is_connected(c4, VertexSet::of({0, 1, 2})));
  CHECK_FALSE(induced_is_connected(path(3), VertexSet::of({0, 2})));
  CHECK_THROWS_AS(induced_is_connected(c4, VertexSet{}), ContractError);
}

TEST_CASE("components are ordered by smallest member") {
  auto parts = components(path(3), VertexSet::of({0, 2}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet::single(0));
  CHECK(parts[1] == VertexSet::single(2));
  CHECK(components(cycle(5), VertexSet::prefix(5)).size() == 1);
  CHECK(components(cycle(5), VertexSet{}).empty());

  const Graph b = bowtie();
  const Vertex hub = VertexSet::prefix(5).first();  // vertex 0 is the shared vertex
  REQUIRE(b.degree(hub) == 4);
  auto sides = components(b, b.vertices() - VertexSet::single(hub));
  REQUIRE(sides.size() == 2);
  CHECK(sides[0].size() == 2);
  CHECK(sides[1].size() == 2);
}

TEST_CASE("deleting vertices") {
  Subgraph s = delete_vertices(cycle(4), VertexSet::single(0));
  CHECK(is_isomorphic(s.graph, path(3)));
  CHECK(s.to_parent == std::vector<Vertex>{1, 2, 3});

  const Graph a4 = build(family::E{family::Named::A4});
  Vertex two = -1;
  for (Vertex v = 0; v < 4; ++v)
    if (a4.degree(v) == 2) two = v;
  CHECK(is_isomorphic(delete_vertices(a4, VertexSet::single(two)).graph, cycle(3)));

  // Both connecting-path vertices of L6 are cut vertices.
  const Graph l6 = build(family::Ln{6});
  REQUIRE(cut_vertices(l6) == VertexSet::of({0, 1}));
  CHECK(components(l6, l6.vertices() - VertexSet::single(0)).size() == 2);
  Subgraph split = delete_vertices(l6, VertexSet::single(0));
  CHECK_FALSE(is_connected(split.graph));
  CHECK_THROWS_AS(delete_vertices(cycle(4), VertexSet::prefix(4)), ContractError);
}

TEST_CASE("pendant vertices") {
  CHECK(pendant_vertices(path(4)) == VertexSet::of({0, 3}));
  CHECK(pendant_vertices(cycle(5)).empty());
  CHECK(pendant_vertices(build(family::Bn{8})).size() == 4);
}

TEST_CASE("cut vertices") {
  CHECK(cut_vertices(build(family::Theta{2, 3, 3})).empty());
  CHECK(cut_vertices(bowtie()) == VertexSet::single(0));
  CHECK(cut_vertices(path(5)) == VertexSet::of({1, 2, 3}));
  CHECK_THROWS_AS(cut_vertices(Graph(3, {{0, 1}})), ContractError);
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(path(2)) == "A_");
  CHECK(to_graph6(cycle(3)) == "Bw");
  CHECK(from_graph6("Bw") == cycle(3));
  CHECK(from_graph6(">>graph6<<A_\n") == path(2));

  std::mt19937_64 rng(7);
  for (int n : {1, 2, 5, 13, 40, 62, 63, 64}) {
    Graph g = oracle::random_connected(rng, n, 0.1);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK(to_graph6(Graph(63, {})).substr(0, 4) == std::string("~??~"));

  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);     // missing body
  CHECK_THROWS_AS(from_graph6("Bww"), ParseError);   // trailing bytes
  CHECK_THROWS_AS(from_graph6("B\x01"), ParseError); // byte out of range
}

TEST_CASE("edge list format") {
  const Graph g = build(family::Ln{7});
  CHECK(from_edge_list(to_edge_list(g)) == g);
  CHECK(from_edge_list("# triangle\n3 3\n0 1\n1 2\n2 0\n") == cycle(3));
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("3 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("x\n"), ParseError);
}

TEST_CASE("certificates identify isomorphism classes") {
  std::mt19937_64 rng(11);
  const Graph c5 = cycle(5);
  for (int t = 0; t < 20; ++t)
    CHECK(canonical_certificate(c5) == canonical_certificate(oracle::permuted(c5, oracle::random_permutation(rng, 5))));
  CHECK(canonical_certificate(build(family::Ln{6})) != canonical_certificate(build(family::An{6})));

  Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const Graph theta = build(family::Theta{3, 3, 3});
  CHECK(oracle::brute_isomorphic(theta, k23));
  CHECK(canonical_certificate(theta) == canonical_certificate(k23));

  CHECK(is_isomorphic(cycle(4), oracle::permuted(cycle(4), {2, 0, 3, 1})));
  CHECK_FALSE(is_isomorphic(path(4), build(family::Star{4})));
  const Graph d331 = build(family::Dumbbell{3, 3, 1});
  CHECK(oracle::brute_isomorphic(d331, bowtie()));
  CHECK(is_isomorphic(d331, bowtie()));

  const Certificate c = canonical_certificate(theta);
  CHECK(c.order == 5);
  CHECK(c.edges == 6);
  CHECK(canonical_certificate(from_graph6(c.bytes)) == c);
}

TEST_CASE("certificates are invariant under relabeling") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    Graph g = oracle::random_connected(rng, n, std::uniform_real_distribution<double>(0, 0.5)(rng));
    Graph h = oracle::permuted(g, oracle::random_permutation(rng, n));
    REQUIRE(canonical_certificate(g) == canonical_certificate(h));
    REQUIRE(canonical_form(g) == canonical_form(h));
  }
  // Regular and highly symmetric graphs stress the search.
  for (const Graph& g : {cycle(12), build(family::Theta{4, 4, 4}), build(family::Star{20})})
    for (int t = 0; t < 5; ++t)
      CHECK(canonical_certificate(g) == canonical_certificate(oracle::permuted(g, oracle::random_permutation(rng, g.order()))));
}

TEST_CASE("certificate equality matches brute-force isomorphism") {
  std::mt19937_64 rng(5);
  int isomorphic = 0, distinct = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    Graph g = oracle::random_connected(rng, n, 0.3);
    Graph h = oracle::random_connected(rng, n, 0.3);
    if (g.size() != h.size()) continue;
    const bool brute = oracle::brute_isomorphic(g, h);
    REQUIRE(brute == (canonical_certificate(g) == canonical_certificate(h)));
    (brute ? isomorphic : distinct)++;
  }
  CHECK(isomorphic > 5);
  CHECK(distinct > 5);
}

TEST_CASE("component blocks partition the set and are connected") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 14)(rng);
    Graph g = oracle::random_connected(rng, n, 0.15);
    VertexSet s(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng));
    VertexSet seen;
    for (VertexSet block : components(g, s)) {
      CHECK((seen & block).empty());
      CHECK(induced_is_connected(g, block));
      seen |= block;
    }
    CHECK(seen == s);
  }
}

TEST_CASE("cut vertices agree with component counts") {
  std::vector<Graph> corpus;
  for (int n = 4; n <= 8; ++n)
    for (auto& c : enumerate_bicyclic(n)) corpus.push_back(c.graph);
  for (int n = 1; n <= 10; ++n)
    for (auto& t : enumerate_trees(n)) corpus.push_back(t);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) corpus.push_back(oracle::random_connected(rng, std::uniform_int_distribution<int>(2, 10)(rng), 0.2));
  for (const Graph& g : corpus) {
    const VertexSet cuts = cut_vertices(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const bool splits = g.order() > 1 && components(g, g.vertices() - VertexSet::single(v)).size() >= 2;
      REQUIRE(cuts.contains(v) == splits);
      if (g.order() > 1) {
        Subgraph s = delete_vertices(g, VertexSet::single(v));
        REQUIRE(s.graph.order() == g.order() - 1);
        REQUIRE(s.graph.size() == g.size() - g.degree(v));
      }
    }
  }
}

TEST_CASE("structure predicates") {
  CHECK(is_tree(path(5)));
  CHECK_FALSE(is_tree(cycle(5)));
  CHECK(is_bicyclic(bowtie()));
  CHECK_FALSE(is_bicyclic(cycle(5)));
  CHECK_FALSE(is_connected(Graph(2, {})));
  Graph u = disjoint_union(path(2), cycle(3));
  CHECK(u.order() == 5);
  CHECK(components(u, u.vertices()).size() == 2);
}

}  // TEST_SUITE
