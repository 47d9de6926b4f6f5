// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpcs/semantics.hpp"
#include "mpcs/ttp.hpp"

namespace mpcs {

// TTP-side honesty evidence: true when nothing in the pooled pre-knowledge
// of the contact vertices I shows that role(v) sent a message at or
// causally after v.
bool hon(const Protocol& p, VertexId v, const Bitset& contact_vertices);

// The resolve messages implied by the exit transitions of an execution, in
// firing order, together with the TTP's reply to each.
struct TtpReplay {
  std::vector<ResolveMsg> msgs;
  std::vector<TtpReply> replies;
  TtpReply last = TtpReply::Abort;  // delta(rho)
};
TtpReplay replay_exits(const Protocol& p, const Execution& rho);

// Fairness of an execution for one signer. Holds when any of:
//  1. delta(rho) = abort and no signature edge of the signer is in the
//     final state;
//  2. the final state contains an end-set vertex of the signer;
//  3. every TTP contact of the signer was answered with other than abort
//     (vacuously true when the signer never exits).
bool execution_fair_for(const Protocol& p, const Execution& rho,
                        RoleId signer);

struct SignerVerdict {
  RoleId role;
  bool fair;
  std::optional<Execution> counterexample;
  std::vector<VertexId> exit_order;   // contact vertices of the witness
  std::vector<TtpReply> ttp_replies;  // reply per contact
  std::size_t states_explored = 0;
};

struct FairnessReport {
  bool fair = true;
  std::vector<SignerVerdict> signers;
  std::size_t states_explored = 0;
};

}  // namespace mpcs
