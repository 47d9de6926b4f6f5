// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include <random>

#include "mpcs/dag.hpp"
#include "mpcs/families.hpp"
#include "support/oracles.hpp"

using namespace mpcs;
using namespace mpcs::test;

namespace {

Dag chain3() { return Dag({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Dag skeletal_dag(Family f) {
  SkeletalGraph sk = generate({f});
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& v : sk.vertices) names.push_back(v.name);
  for (const auto& e : sk.edges) edges.emplace_back(e.src, e.dst);
  return Dag(names, edges);
}

Dag random_dag(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 12);
  int n = size(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::size_t> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_real_distribution<double> coin(0, 1);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng) < 0.3) edges.emplace_back(names[order[a]], names[order[b]]);
  return Dag(names, edges);
}

}  // namespace

TEST_CASE("construction rejects malformed graphs") {
  CHECK_THROWS_AS(Dag({"a", "a"}, {}), GraphError);
  CHECK_THROWS_AS(Dag({"a"}, {{"a", "a"}}), GraphError);
  CHECK_THROWS_AS(Dag({"a", "b"}, {{"a", "c"}}), GraphError);
  CHECK_THROWS_AS(Dag({"a", "b"}, {{"a", "b"}, {"b", "a"}}), GraphError);
  CHECK_THROWS_AS(Dag({"a", "b"}, {{"a", "b"}, {"a", "b"}}), GraphError);
}

TEST_CASE("causal precedence on a chain") {
  Dag g = chain3();
  VertexId a = *g.find("a"), b = *g.find("b"), c = *g.find("c");
  CHECK(g.precedes(a, c));       // transitivity along the path
  CHECK_FALSE(g.precedes(a, a)); // strict on vertices
  CHECK_FALSE(g.precedes(c, a));

  // The mixed extension: a vertex precedes its own outgoing edge.
  EdgeId ab = *g.find_edge(a, b), bc = *g.find_edge(b, c);
  CHECK(g.precedes(Item::vertex(a), Item::edge(ab)));
  CHECK(g.precedes(Item::edge(ab), Item::edge(bc)));
  CHECK(g.precedes(Item::edge(ab), Item::vertex(b)));
  CHECK_FALSE(g.precedes(Item::edge(bc), Item::edge(ab)));
  CHECK_FALSE(g.precedes(Item::edge(ab), Item::edge(ab)));
}

TEST_CASE("skeletal graph of the parallel three-party protocol") {
  Dag g = skeletal_dag(Family::Parallel3Fair);
  VertexId bq = *g.find("Bq"), a4 = *g.find("A4"), a3 = *g.find("A3");
  CHECK(g.precedes(bq, a4));

  Bitset seed = g.empty_item_set();
  seed.set(g.item_id(Item::vertex(a3)));
  Bitset closure = g.causal_closure(seed);
  CHECK(closure.test(g.item_id(Item::vertex(bq))));
  CHECK(closure.test(g.item_id(Item::vertex(*g.find("C2")))));
  CHECK(closure == oracle_closure(g, seed));
}

TEST_CASE("closure basics") {
  Dag g = chain3();
  CHECK(g.causal_closure(g.empty_item_set()).empty());
  CHECK(g.is_causally_closed(g.empty_item_set()));

  Bitset s = g.empty_item_set();
  s.set(g.item_id(Item::vertex(*g.find("c"))));
  Bitset cl = g.causal_closure(s);
  CHECK(cl.count() == 5);  // a, (a,b), b, (b,c), c
  CHECK(g.is_causally_closed(cl));
  CHECK(g.causal_closure(cl) == cl);

  Bitset b_only = g.empty_item_set();
  b_only.set(g.item_id(Item::vertex(*g.find("b"))));
  CHECK_FALSE(g.is_causally_closed(b_only));
}

TEST_CASE("minset and maxset") {
  Dag g = chain3();
  CHECK(g.minset(g.empty_vertex_set()).empty());
  CHECK(g.maxset(g.empty_vertex_set()).empty());

  Bitset all = g.empty_vertex_set();
  for (VertexId v = 0; v < 3; ++v) all.set(v);
  Bitset mx = g.maxset(all);
  CHECK(mx.count() == 1);
  CHECK(mx.test(*g.find("c")));

  // An antichain is its own minset and maxset.
  Dag anti({"a", "b"}, {});
  Bitset both = anti.empty_vertex_set();
  both.set(0);
  both.set(1);
  CHECK(anti.minset(both) == both);
  CHECK(anti.maxset(both) == both);
}

TEST_CASE("path enumeration") {
  Dag g = chain3();
  VertexId a = *g.find("a");
  auto trivial = g.paths({a}, a);
  REQUIRE(trivial.size() == 1);       // the zero-length path
  CHECK(trivial[0] == std::vector<VertexId>{a});

  Dag diamond({"a", "b", "c", "d"},
              {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  auto two = diamond.paths({*diamond.find("a")}, *diamond.find("d"));
  REQUIRE(two.size() == 2);
  // Lexicographic order of the name sequences.
  CHECK(diamond.name(two[0][1]) == "b");
  CHECK(diamond.name(two[1][1]) == "c");
}

TEST_CASE("path count on the full parallel three-party graph") {
  Protocol p = Protocol::expand(generate({Family::Parallel3Unfair}));
  const Dag& g = p.dag();
  std::vector<VertexId> sources = {*g.find("A1"), *g.find("B1"),
                                   *g.find("Bq"), *g.find("C1")};
  auto paths = g.paths(sources, *g.find("A3"));
  CHECK(paths.size() == 51);
  CHECK(oracle_path_count(g, sources, *g.find("A3")) == 51);
  for (const auto& path : paths) {
    CHECK(path.back() == *g.find("A3"));
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      CHECK(g.find_edge(path[i], path[i + 1]).has_value());
  }
}

TEST_CASE("properties against brute force on random dags") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    Dag g = random_dag(rng);

    // Precedence agrees with BFS reachability, for all item pairs.
    for (std::size_t x = 0; x < g.item_count(); ++x)
      for (std::size_t y = 0; y < g.item_count(); ++y)
        CHECK(g.precedes(g.item(x), g.item(y)) ==
              oracle_precedes(g, g.item(x), g.item(y)));

    // Transitive and antisymmetric on vertices.
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.precedes(u, v)) CHECK_FALSE(g.precedes(v, u));
        for (VertexId w = 0; w < g.vertex_count(); ++w)
          if (g.precedes(u, v) && g.precedes(v, w)) CHECK(g.precedes(u, w));
      }

    // Random sets: closure is closed, idempotent, monotone; matches oracle.
    std::uniform_real_distribution<double> coin(0, 1);
    Bitset s = g.empty_item_set();
    for (std::size_t i = 0; i < g.item_count(); ++i)
      if (coin(rng) < 0.3) s.set(i);
    Bitset cl = g.causal_closure(s);
    CHECK(g.is_causally_closed(cl));
    CHECK(cl == oracle_closure(g, s));
    Bitset bigger = s;
    bigger |= g.causal_closure(cl);
    CHECK(g.causal_closure(bigger) == g.causal_closure(cl));

    // minset/maxset are subsets; everything sits above some minimal vertex.
    Bitset vs = g.empty_vertex_set();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (coin(rng) < 0.5) vs.set(v);
    Bitset mn = g.minset(vs), mx = g.maxset(vs);
    CHECK((mn & vs) == mn);
    CHECK((mx & vs) == mx);
    vs.for_each([&](std::size_t v) {
      bool above_min = false;
      mn.for_each([&](std::size_t m) {
        if (g.precedes_eq(static_cast<VertexId>(m), static_cast<VertexId>(v)))
          above_min = true;
      });
      CHECK(above_min);
    });
  }
}
