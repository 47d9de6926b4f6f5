// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "mpcs/families.hpp"
#include "mpcs/mpcs_format.hpp"

using namespace mpcs;

TEST_CASE("parse a small skeletal file") {
  const char* text =
      "# two-party demo\n"
      "protocol demo\n"
      "signers A B\n"
      "vertex a1 role=A\n"
      "vertex b1 role=B sign\n"
      "edge a1 b1\n";
  SkeletalGraph sk = parse_skeletal(text);
  CHECK(sk.name == "demo");
  CHECK(sk.signers == std::vector<std::string>{"A", "B"});
  REQUIRE(sk.vertices.size() == 2);
  CHECK(sk.vertices[1].sign);
  REQUIRE(sk.edges.size() == 1);
  CHECK_FALSE(sk.edges[0].eps);
}

TEST_CASE("parse errors carry line and column") {
  auto expect_error = [](const char* text, std::size_t line) {
    try {
      parse_skeletal(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column >= 1);
    }
  };
  expect_error("protocol p\nsigners A B\nvertex a1 role=Q\n", 3);
  expect_error("protocol p\nsigners A B\nbogus x\n", 3);
  expect_error("protocol p\nsigners A B\nvertex a1 role=A\nvertex a1 role=A\n",
               4);
  // Cycles are rejected at the structural check.
  CHECK_THROWS_AS(parse_skeletal("protocol p\nsigners A B\n"
                                 "vertex a1 role=A\nvertex b1 role=B\n"
                                 "edge a1 b1\nedge b1 a1\n"),
                  ParseError);
  // The TTP names are reserved.
  CHECK_THROWS_AS(parse_skeletal("protocol p\nsigners A T\n"
                                 "vertex a1 role=A\nvertex t1 role=T\n"),
                  ParseError);
  // eps across roles.
  CHECK_THROWS_AS(parse_skeletal("protocol p\nsigners A B\n"
                                 "vertex a1 role=A\nvertex b1 role=B\n"
                                 "edge a1 b1 eps\n"),
                  ParseError);
}

TEST_CASE("serialize then parse is the identity on families") {
  for (const auto& name : family_names()) {
    SkeletalGraph sk = generate({*family_from_name(name)});
    SkeletalGraph back = parse_skeletal(serialize_skeletal(sk));
    CHECK(back.name == sk.name);
    CHECK(back.signers == sk.signers);
    CHECK(back.vertices.size() == sk.vertices.size());
    CHECK(back.edges.size() == sk.edges.size());
    // Expansion of both yields identical graphs.
    Protocol a = Protocol::expand(sk), b = Protocol::expand(back);
    CHECK(a.dag().vertex_count() == b.dag().vertex_count());
    CHECK(a.dag().edge_count() == b.dag().edge_count());
    for (EdgeId e = 0; e < a.dag().edge_count(); ++e) {
      CHECK(a.dag().edge_name(e) == b.dag().edge_name(e));
      CHECK(a.label(e) == b.label(e));
    }
  }
}
