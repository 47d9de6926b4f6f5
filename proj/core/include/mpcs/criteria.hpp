// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <vector>

#include "mpcs/protocol.hpp"

namespace mpcs {

// True when some signer role has two causally incomparable vertices.
bool has_in_role_parallelism(const Protocol& p);

// The start set of the permutation criteria: initial-set vertices with no
// same-role initial-set vertex after them.
Bitset criterion_start_set(const Protocol& p);

struct PermutationFailure {
  VertexId vertex;                 // signing-set vertex
  std::vector<RoleId> permutation; // roles missing along every path
};

// Necessary condition: for each signing-set vertex v and every permutation
// of the other signers, some path from the start set to v must contain the
// permutation as a subsequence. Returns all failures; for an optimistic
// protocol any failure implies unfairness. Decided by a DP over
// (vertex, matched prefix).
std::vector<PermutationFailure> check_permutation_necessary(const Protocol& p);

struct SufficiencyClaim {
  RoleId role;
  bool fair;
};

struct SufficiencyResult {
  bool applicable = false;  // requires no in-role parallelism
  std::vector<SufficiencyClaim> claims;
};

// Sufficient condition for protocols without in-role parallelism: when the
// permutation coverage above holds for every signing-set vertex of a role,
// the protocol is fair for that role. Decided independently of the DP, by
// explicit path enumeration with greedy subsequence matching. Roles without
// signing-set vertices get no claim.
SufficiencyResult check_permutation_sufficient(const Protocol& p);

}  // namespace mpcs
