// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/fairness.hpp"

namespace mpcs {

bool hon(const Protocol& p, VertexId v, const Bitset& contact_vertices) {
  const Bitset pooled = p.pre_knowledge_of_set(contact_vertices);
  bool honest = true;
  pooled.for_each([&](std::size_t e) {
    if (!honest) return;
    VertexId src = p.dag().edge(static_cast<EdgeId>(e)).src;
    if (p.role_of(src) == p.role_of(v) &&
        p.dag().precedes(Item::vertex(v), Item::edge(static_cast<EdgeId>(e))))
      honest = false;
  });
  return honest;
}

TtpReplay replay_exits(const Protocol& p, const Execution& rho) {
  TtpReplay out;
  TtpState st = TtpState::initial(p);
  out.last = st.decision;
  for (const Step& step : rho.steps) {
    if (step.kind != TransitionKind::Exit) continue;
    VertexId v = p.dag().edge(step.item.id).src;
    ResolveMsg m = ResolveMsg::for_vertex(p, v);
    TtpReply r = delta0(p, ResolveRequest::of(m), st);
    out.msgs.push_back(std::move(m));
    out.replies.push_back(r);
    out.last = r;
  }
  return out;
}

bool execution_fair_for(const Protocol& p, const Execution& rho,
                        RoleId signer) {
  const TtpReplay replay = replay_exits(p, rho);
  const State fin = final_state(p, rho);
  const Dag& g = p.dag();

  // 1: aborted overall and the signer's signature never left.
  if (replay.last == TtpReply::Abort) {
    bool sig_out = false;
    for (EdgeId e = 0; e < g.edge_count() && !sig_out; ++e)
      if (p.label(e) == LabelKind::Signature &&
          p.role_of(g.edge(e).src) == signer &&
          fin.test(p.item_of_edge(e)))
        sig_out = true;
    if (!sig_out) return true;
  }

  // 2: the signer holds every signature at some executed end-set vertex.
  bool at_end = false;
  p.end_set().for_each([&](std::size_t v) {
    if (p.role_of(static_cast<VertexId>(v)) == signer &&
        fin.test(g.item_id(Item::vertex(static_cast<VertexId>(v)))))
      at_end = true;
  });
  if (at_end) return true;

  // 3: no abort token reached the signer.
  for (std::size_t i = 0; i < replay.msgs.size(); ++i)
    if (replay.msgs[i].requester == signer &&
        replay.replies[i] == TtpReply::Abort)
      return false;
  return true;
}

}  // namespace mpcs
