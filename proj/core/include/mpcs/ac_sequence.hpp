// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>

#include "mpcs/fairness.hpp"

namespace mpcs {

// An abort-chaining sequence: the order in which signers contact the TTP,
// plus the signing vertex of the stranded signer.
struct AcSequence {
  std::vector<VertexId> contacts;
  VertexId sig_vertex = 0;
};

// The five conditions: the first contact is in the initial set; requester
// roles are pairwise distinct; at each step the requester and the previous
// contacter still look honest on the pooled evidence; no end-set vertex of
// the last signer precedes its contact; and the signing vertex is a
// signing-set vertex of the last signer, outside the end set, not causally
// at or after the contact.
bool is_ac_sequence(const Protocol& p, const AcSequence& ac);

// Exhaustive DFS over contact sequences in lexicographic vertex order,
// pruning on violated honesty conditions. Returns the first sequence found.
std::optional<AcSequence> find_ac_sequence(const Protocol& p);

// The witness execution of the unfairness proof: interleaves causal-closure
// runs of {sig_vertex, v_i} with the exit transitions, keeps the last
// signer's contact vertex unexecuted, and makes sure one signature of the
// last signer has left. The result is honest for the last signer and unfair
// for it.
Execution ac_to_execution(const Protocol& p, const AcSequence& ac);

}  // namespace mpcs
