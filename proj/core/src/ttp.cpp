// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/ttp.hpp"

#include <algorithm>

namespace mpcs {

ResolveMsg ResolveMsg::for_vertex(const Protocol& p, VertexId v) {
  if (!p.is_signer_vertex(v))
    throw SpecError("resolve message for the TTP vertex");
  ResolveMsg m;
  m.requester = p.role_of(v);
  m.vertex = v;
  p.pre_knowledge(v).for_each(
      [&](std::size_t e) { m.evidence.push_back(static_cast<EdgeId>(e)); });
  return m;  // edge ids ascend, which is the canonical order
}

TtpState TtpState::initial(const Protocol& p) {
  TtpState st;
  st.contacted = p.dag().empty_vertex_set();
  return st;
}

namespace {

// The received message equals p_w for some vertex w exactly when it names a
// signer vertex of its own role and carries that vertex's pre-knowledge.
bool is_some_pv(const Protocol& p, const ResolveMsg& m) {
  if (m.vertex >= p.dag().vertex_count() || !p.is_signer_vertex(m.vertex))
    return false;
  if (p.role_of(m.vertex) != m.requester) return false;
  const ResolveMsg expect = ResolveMsg::for_vertex(p, m.vertex);
  return m.evidence == expect.evidence;
}

}  // namespace

TtpReply delta0(const Protocol& p, const ResolveRequest& req, TtpState& st) {
  // Malformed input: reply abort, record nothing.
  if (req.malformed || req.msg.requester >= p.signer_count())
    return TtpReply::Abort;
  const ResolveMsg& m = req.msg;
  const RoleId r = m.requester;

  // Preliminary checks: known dishonest requester, message not matching any
  // p_w, or a repeated contact by the same signer.
  bool repeat = false;
  st.contacted.for_each([&](std::size_t w) {
    if (p.role_of(static_cast<VertexId>(w)) == r) repeat = true;
  });
  if (st.is_dishonest(r) || !is_some_pv(p, m) || repeat) {
    st.mark_dishonest(r);
    return TtpReply::Abort;
  }

  st.contacted.set(m.vertex);
  st.evidence.push_back(m);

  if (!p.initial_set().test(m.vertex)) {
    // Catch every contacter whose role demonstrably continued the protocol
    // at or after its contact vertex, judged on the pooled pre-knowledge.
    Bitset pooled = p.pre_knowledge_of_set(st.contacted);
    st.contacted.for_each([&](std::size_t w) {
      Item wv = Item::vertex(static_cast<VertexId>(w));
      bool caught = false;
      pooled.for_each([&](std::size_t e) {
        if (caught) return;
        VertexId src = p.dag().edge(static_cast<EdgeId>(e)).src;
        if (p.role_of(src) == p.role_of(static_cast<VertexId>(w)) &&
            p.dag().precedes(wv, Item::edge(static_cast<EdgeId>(e))))
          caught = true;
      });
      if (caught) st.mark_dishonest(p.role_of(static_cast<VertexId>(w)));
    });

    // Resolve when the requester is the only honest signer seen so far.
    bool requester_alone = true;
    st.contacted.for_each([&](std::size_t w) {
      RoleId wr = p.role_of(static_cast<VertexId>(w));
      if (!st.is_dishonest(wr) && wr != r) requester_alone = false;
    });
    if (requester_alone) st.decision = TtpReply::Signed;
  }
  return st.decision;
}

TtpReply delta(const Protocol& p, const std::vector<ResolveRequest>& msgs) {
  TtpState st = TtpState::initial(p);
  TtpReply r = st.decision;
  for (const auto& m : msgs) r = delta0(p, m, st);
  return r;
}

TtpReply delta(const Protocol& p, const std::vector<ResolveMsg>& msgs) {
  std::vector<ResolveRequest> reqs;
  reqs.reserve(msgs.size());
  for (const auto& m : msgs) reqs.push_back(ResolveRequest::of(m));
  return delta(p, reqs);
}

std::string resolve_msg_text(const Protocol& p, const ResolveMsg& m) {
  std::string out = "resolve " + p.role_name(m.requester) + " " +
                    p.dag().name(m.vertex);
  for (EdgeId e : m.evidence) out += " " + p.dag().edge_name(e);
  return out;
}

}  // namespace mpcs
