// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/families.hpp"

#include <algorithm>

namespace mpcs {

namespace {

const std::vector<std::pair<std::string, Family>>& table() {
  static const std::vector<std::pair<std::string, Family>> t = {
      {"linear2", Family::Linear2},
      {"bcast2", Family::Bcast2},
      {"dag2", Family::Dag2},
      {"linear3", Family::Linear3},
      {"parallel3_unfair", Family::Parallel3Unfair},
      {"parallel3_fair", Family::Parallel3Fair},
      {"butterfly", Family::Butterfly},
      {"contractor", Family::Contractor},
      {"two_contractors", Family::TwoContractors},
      {"inrole_contractor", Family::InroleContractor},
  };
  return t;
}

std::string vx(const std::string& role, unsigned i) {
  return role + std::to_string(i);
}

void add_vertex(SkeletalGraph& sk, const std::string& name,
                const std::string& role, bool sign = false) {
  sk.vertices.push_back({name, role, sign});
}

void add_edge(SkeletalGraph& sk, const std::string& src,
              const std::string& dst, bool eps = false) {
  sk.edges.push_back({src, dst, eps});
}

// The two-party linear protocol: one promise round, one signature round.
SkeletalGraph linear2() {
  SkeletalGraph sk;
  sk.name = "linear2";
  sk.signers = {"A", "B"};
  add_vertex(sk, "A1", "A");
  add_vertex(sk, "B1", "B");
  add_vertex(sk, "A2", "A", true);
  add_vertex(sk, "B2", "B", true);
  add_vertex(sk, "A3", "A");
  add_edge(sk, "A1", "B1");
  add_edge(sk, "B1", "A2");
  add_edge(sk, "A2", "B2");
  add_edge(sk, "B2", "A3");
  return sk;
}

// The broadcast family: n+1 all-to-all rounds, the last one signatures,
// each role's vertices chained by eps edges. butterfly(2) is the classical
// two-party broadcast protocol.
SkeletalGraph butterfly(unsigned n, const std::string& name) {
  if (n < 2 || n > 5) throw SpecError("butterfly supports 2..5 signers");
  static const char* roles[] = {"A", "B", "C", "D", "E"};
  SkeletalGraph sk;
  sk.name = name;
  for (unsigned r = 0; r < n; ++r) sk.signers.push_back(roles[r]);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned i = 1; i <= n + 2; ++i)
      add_vertex(sk, vx(roles[r], i), roles[r], i == n + 1);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned i = 1; i <= n + 1; ++i) {
      add_edge(sk, vx(roles[r], i), vx(roles[r], i + 1), true);
      for (unsigned q = 0; q < n; ++q)
        if (q != r) add_edge(sk, vx(roles[r], i), vx(roles[q], i + 1));
    }
  return sk;
}

// The broadcast protocol with the first two vertices of each role left
// unordered (in-role parallelism), joined before the third.
SkeletalGraph dag2() {
  SkeletalGraph sk = butterfly(2, "dag2");
  auto drop = [&](const std::string& s, const std::string& d) {
    sk.edges.erase(std::remove_if(sk.edges.begin(), sk.edges.end(),
                                  [&](const SkeletalEdge& e) {
                                    return e.eps && e.src == s && e.dst == d;
                                  }),
                   sk.edges.end());
  };
  drop("A1", "A2");
  drop("B1", "B2");
  return sk;
}

// The three-party protocol built from a signing sequence: one line of
// promises, signatures at the third visit of each role.
SkeletalGraph linear3() {
  SkeletalGraph sk;
  sk.name = "linear3";
  sk.signers = {"A", "B", "C"};
  const char* chain[] = {"A1", "B1", "C1", "A2", "B2", "C2",
                         "A3", "B3", "C3", "A4", "B4"};
  for (const char* v : chain) {
    std::string s(v);
    add_vertex(sk, s, s.substr(0, 1), s == "A3" || s == "B3" || s == "C3");
  }
  for (unsigned i = 0; i + 1 < std::size(chain); ++i)
    add_edge(sk, chain[i], chain[i + 1]);
  return sk;
}

// linear3 with the extra vertex Bq on a parallel thread of B; unfair.
// With the eps edge Bq->B2 the thread is ordered and fairness returns.
SkeletalGraph parallel3(bool causal_edge) {
  SkeletalGraph sk;
  sk.name = causal_edge ? "parallel3_fair" : "parallel3_unfair";
  sk.signers = {"A", "B", "C"};
  const char* verts[] = {"A1", "B1", "C1", "A2", "B2", "C2", "Bq",
                         "A3", "B3", "C3", "A4", "B4"};
  for (const char* v : verts) {
    std::string s(v);
    add_vertex(sk, s, s.substr(0, 1), s == "A3" || s == "B3" || s == "C3");
  }
  add_edge(sk, "A1", "B1");
  add_edge(sk, "B1", "C1");
  add_edge(sk, "C1", "A2");
  add_edge(sk, "C1", "Bq");
  add_edge(sk, "A2", "B2");
  add_edge(sk, "B2", "C2");
  add_edge(sk, "C2", "A3");
  add_edge(sk, "Bq", "A3");
  add_edge(sk, "A3", "B3");
  add_edge(sk, "B3", "C3");
  add_edge(sk, "C3", "A4");
  add_edge(sk, "A4", "B4");
  if (causal_edge) add_edge(sk, "Bq", "B2", true);
  return sk;
}

// One contractor X and k subcontractors; k+2 rounds of subcontractors
// writing to the contractor and the contractor answering all of them, the
// last round carrying signatures.
SkeletalGraph contractor(unsigned k) {
  if (k < 1 || k > 4) throw SpecError("contractor supports 1..4 subcontractors");
  static const char* subs[] = {"P", "Q", "R", "S"};
  SkeletalGraph sk;
  sk.name = "contractor" + std::to_string(k);
  sk.signers = {"X"};
  for (unsigned i = 0; i < k; ++i) sk.signers.push_back(subs[i]);
  const unsigned rounds = k + 2;
  for (unsigned j = 1; j <= rounds; ++j) add_vertex(sk, vx("X", j), "X", j == rounds);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 1; j <= rounds + 1; ++j)
      add_vertex(sk, vx(subs[i], j), subs[i], j == rounds);
  for (unsigned j = 1; j <= rounds; ++j)
    for (unsigned i = 0; i < k; ++i) {
      add_edge(sk, vx(subs[i], j), vx("X", j));
      add_edge(sk, vx("X", j), vx(subs[i], j + 1));
    }
  return sk;
}

// Two contractors A and B with k joint subcontractors: everyone opens
// towards A, then rounds of A -> subs -> B -> A with the last round signed.
// One promise round per subcontractor plus one extra is what the second
// contractor needs to demonstrate every contact order; fewer rounds fail
// the permutation criterion.
SkeletalGraph two_contractors(unsigned k) {
  if (k < 2 || k > 3) throw SpecError("two_contractors supports 2..3 subcontractors");
  static const char* subs[] = {"L", "M", "R"};
  std::vector<std::string> sub(subs, subs + 3);
  if (k == 2) sub = {"L", "R"};
  SkeletalGraph sk;
  sk.name = "two_contractors" + std::to_string(k);
  sk.signers = {"A", "B"};
  for (unsigned i = 0; i < k; ++i) sk.signers.push_back(sub[i]);
  const unsigned rounds = k + 2;
  for (unsigned j = 1; j <= rounds + 1; ++j) {
    add_vertex(sk, vx("A", j), "A", j == rounds);
    add_vertex(sk, vx("B", j), "B", j == rounds + 1);
  }
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 1; j <= rounds + 1; ++j)
      add_vertex(sk, vx(sub[i], j), sub[i], j == rounds + 1);
  for (unsigned i = 0; i < k; ++i) add_edge(sk, vx(sub[i], 1), "A1");
  add_edge(sk, "B1", "A1");
  for (unsigned j = 1; j <= rounds; ++j) {
    for (unsigned i = 0; i < k; ++i) {
      add_edge(sk, vx("A", j), vx(sub[i], j + 1));
      add_edge(sk, vx(sub[i], j + 1), vx("B", j + 1));
    }
    add_edge(sk, vx("B", j + 1), vx("A", j + 1));
  }
  return sk;
}

// Subcontracting with parallel threads inside the contractor role: per
// round, thread XP receives P's promise and forwards it to Q without
// waiting for Q's promise, thread XQ symmetrically, signatures in the last
// round. Same round count as the single-contractor protocol with two
// subcontractors. Reconstructed from the round structure; the fairness
// claim is left to the model checker.
SkeletalGraph inrole_contractor(unsigned k) {
  if (k != 2) throw SpecError("inrole_contractor supports exactly 2 subcontractors");
  const unsigned rounds = 4;
  SkeletalGraph sk;
  sk.name = "inrole_contractor";
  sk.signers = {"X", "P", "Q"};
  add_vertex(sk, "X1", "X");
  add_vertex(sk, "XF", "X");
  for (unsigned j = 1; j <= rounds + 1; ++j) {
    add_vertex(sk, vx("P", j), "P", j == rounds);
    add_vertex(sk, vx("Q", j), "Q", j == rounds);
  }
  for (unsigned j = 1; j <= rounds; ++j) {
    add_vertex(sk, vx("XP", j), "X", j == rounds);
    add_vertex(sk, vx("XQ", j), "X", j == rounds);
  }
  add_edge(sk, "X1", "P1");
  add_edge(sk, "X1", "Q1");
  add_edge(sk, "X1", "XP1", true);
  add_edge(sk, "X1", "XQ1", true);
  for (unsigned j = 1; j <= rounds; ++j) {
    add_edge(sk, vx("P", j), vx("XP", j));
    add_edge(sk, vx("XP", j), vx("Q", j + 1));
    add_edge(sk, vx("Q", j), vx("XQ", j));
    add_edge(sk, vx("XQ", j), vx("P", j + 1));
    add_edge(sk, vx("P", j), vx("P", j + 1), true);
    add_edge(sk, vx("Q", j), vx("Q", j + 1), true);
    if (j < rounds) {
      add_edge(sk, vx("XP", j), vx("XP", j + 1), true);
      add_edge(sk, vx("XQ", j), vx("XQ", j + 1), true);
    }
  }
  add_edge(sk, vx("XP", rounds), "XF", true);
  add_edge(sk, vx("XQ", rounds), "XF", true);
  return sk;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : table()) out.push_back(n);
    return out;
  }();
  return names;
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [n, f] : table())
    if (n == name) return f;
  return std::nullopt;
}

const std::string& family_name(Family f) {
  for (const auto& [n, fam] : table())
    if (fam == f) return n;
  throw SpecError("unknown family");
}

SkeletalGraph generate(const FamilySpec& spec) {
  const unsigned n = spec.n;
  switch (spec.family) {
    case Family::Linear2:
      return linear2();
    case Family::Bcast2:
      return butterfly(2, "bcast2");
    case Family::Dag2:
      return dag2();
    case Family::Linear3:
      return linear3();
    case Family::Parallel3Unfair:
      return parallel3(false);
    case Family::Parallel3Fair:
      return parallel3(true);
    case Family::Butterfly:
      return butterfly(n ? n : 4, "butterfly" + std::to_string(n ? n : 4));
    case Family::Contractor:
      return contractor(n ? n : 3);
    case Family::TwoContractors:
      return two_contractors(n ? n : 2);
    case Family::InroleContractor:
      return inrole_contractor(n ? n : 2);
  }
  throw SpecError("unknown family");
}

}  // namespace mpcs
