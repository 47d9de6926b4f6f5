// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "mpcs/ac_sequence.hpp"
#include "mpcs/families.hpp"

using namespace mpcs;

namespace {

Protocol family(Family f) { return Protocol::expand(generate({f})); }

Bitset contacts(const Protocol& p, std::initializer_list<const char*> names) {
  Bitset out = p.dag().empty_vertex_set();
  for (const char* n : names) out.set(*p.dag().find(n));
  return out;
}

}  // namespace

TEST_CASE("the hon predicate") {
  Protocol p = family(Family::Parallel3Unfair);
  VertexId bq = *p.dag().find("Bq");

  CHECK(hon(p, bq, p.dag().empty_vertex_set()));  // empty evidence
  CHECK(hon(p, bq, contacts(p, {"Bq", "C3"})));
  CHECK_FALSE(hon(p, bq, contacts(p, {"Bq", "C3", "A4"})));
}

TEST_CASE("execution fairness") {
  Protocol p = family(Family::Linear3);

  Execution empty;
  empty.start = p.dag().empty_item_set();
  for (RoleId r = 0; r < p.signer_count(); ++r)
    CHECK(execution_fair_for(p, empty, r));

  // A closed execution reaches the end set for everyone.
  Execution closed = closed_execution(p);
  for (RoleId r = 0; r < p.signer_count(); ++r)
    CHECK(execution_fair_for(p, closed, r));

  // The parallel-thread attack is unfair for A and only A.
  Protocol q = family(Family::Parallel3Unfair);
  AcSequence ac{{*q.dag().find("Bq"), *q.dag().find("C3"),
                 *q.dag().find("A4")},
                *q.dag().find("A3")};
  REQUIRE(is_ac_sequence(q, ac));
  Execution attack = ac_to_execution(q, ac);
  CHECK(is_valid_execution(q, attack));
  CHECK_FALSE(execution_fair_for(q, attack, *q.find_role("A")));
  CHECK(is_honest(q, attack, *q.find_role("A")));
}

TEST_CASE("ttp replay of an execution") {
  Protocol p = family(Family::Parallel3Unfair);
  AcSequence ac{{*p.dag().find("Bq"), *p.dag().find("C3"),
                 *p.dag().find("A4")},
                *p.dag().find("A3")};
  Execution attack = ac_to_execution(p, ac);
  TtpReplay replay = replay_exits(p, attack);
  REQUIRE(replay.replies.size() == 3);
  for (TtpReply r : replay.replies) CHECK(r == TtpReply::Abort);
  CHECK(replay.last == TtpReply::Abort);
  CHECK(replay.msgs[0].vertex == *p.dag().find("Bq"));
  CHECK(replay.msgs[2].vertex == *p.dag().find("A4"));
}
