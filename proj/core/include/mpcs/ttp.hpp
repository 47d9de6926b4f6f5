// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpcs/protocol.hpp"

namespace mpcs {

enum class TtpReply : std::uint8_t { Abort, Signed };

// The resolve message a signer presents when contacting the TTP from vertex
// v: its own promise for (contract, v) plus the labels of the pre-knowledge
// edges, canonically ordered. The fields may be assembled by hand to model
// bogus requests; the decision procedure validates them structurally.
struct ResolveMsg {
  RoleId requester = 0;
  VertexId vertex = 0;
  std::vector<EdgeId> evidence;  // sorted edge ids

  static ResolveMsg for_vertex(const Protocol& p, VertexId v);
  bool operator==(const ResolveMsg&) const = default;
};

// A request as received: either a structurally malformed blob or a message.
struct ResolveRequest {
  bool malformed = false;
  ResolveMsg msg;

  static ResolveRequest of(ResolveMsg m) { return {false, std::move(m)}; }
  static ResolveRequest garbage() { return {true, {}}; }
};

// The TTP's per-contract memory threaded through the decision procedure.
// The decision is monotone: once signed it never reverts.
struct TtpState {
  TtpReply decision = TtpReply::Abort;
  std::vector<ResolveMsg> evidence;
  Bitset contacted;        // vertex set I
  std::uint32_t dishonest = 0;  // role mask

  static TtpState initial(const Protocol& p);
  bool is_dishonest(RoleId r) const { return dishonest & (1u << r); }
  void mark_dishonest(RoleId r) { dishonest |= 1u << r; }
};

// One step of the TTP decision procedure. Mutates the state and returns the
// reply for this requester.
TtpReply delta0(const Protocol& p, const ResolveRequest& req, TtpState& st);

// The folded decision function: the reply to the last message of the
// sequence, starting from the initial state.
TtpReply delta(const Protocol& p, const std::vector<ResolveRequest>& msgs);
TtpReply delta(const Protocol& p, const std::vector<ResolveMsg>& msgs);

std::string resolve_msg_text(const Protocol& p, const ResolveMsg& m);

}  // namespace mpcs
