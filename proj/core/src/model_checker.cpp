// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/model_checker.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace mpcs {

namespace {

enum class Reply : std::uint8_t { None, Abort, Signed };

struct Node {
  Bitset items;
  Bitset contacted;  // TTP contact vertices I
  std::uint32_t dishonest = 0;
  TtpReply decision = TtpReply::Abort;
  Reply honest_reply = Reply::None;

  bool operator==(const Node&) const = default;

  std::size_t hash() const {
    std::size_t h = items.hash();
    h ^= contacted.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= (std::size_t{dishonest} << 8) ^ (std::size_t(decision) << 4) ^
         std::size_t(honest_reply);
    return h;
  }
};

struct Move {
  enum class Kind : std::uint8_t { HonestRecv, AdvSend, AdvExit, HonestExit };
  Kind kind;
  std::uint32_t id;  // vertex id for recv/exits, edge id for sends
};

// Exploration for one honest signer. The search space is reduced without
// losing attacks:
//  - the honest signer's sends and eps edges fire eagerly (they only make
//    more behavior possible, for both sides);
//  - adversary sends are explored only for signature edges addressed to the
//    honest signer: promise edges are pre-sent in the start state and
//    messages between dishonest signers influence no fairness predicate;
//  - each dishonest signer contacts the TTP at most once, from a vertex
//    whose honest-sourced pre-knowledge has actually been sent, and only if
//    the decision procedure does not mark the requester itself (a contact
//    caught on the spot never extends an abort chain);
//  - once the TTP decision is "signed" every continuation is fair for the
//    honest signer, so such nodes are not expanded.
class Explorer {
 public:
  Explorer(const Protocol& p, RoleId signer, const ModelCheckOptions& opts)
      : p_(p), g_(p.dag()), r_(signer), frag_(p.fragment(signer)),
        opts_(opts) {
    const std::size_t nv = g_.vertex_count();
    r_sig_items_ = g_.empty_item_set();
    r_end_items_ = g_.empty_item_set();
    presend_ = g_.empty_item_set();
    eager_.clear();
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      bool honest_src = p_.role_of(ed.src) == r_;
      if (p_.label(e) == LabelKind::Signature && honest_src)
        r_sig_items_.set(p_.item_of_edge(e));
      if (honest_src && p_.label(e) != LabelKind::Exit)
        eager_.push_back(p_.item_of_edge(e));
      if (!honest_src && p_.is_signer_vertex(ed.src) &&
          p_.is_message_edge(e) && !p_.signing_set().test(ed.src))
        presend_.set(p_.item_of_edge(e));
      if (p_.label(e) == LabelKind::Signature && !honest_src &&
          p_.role_of(ed.dst) == r_)
        adv_sends_.push_back(e);
    }
    p_.end_set().for_each([&](std::size_t v) {
      if (p_.role_of(static_cast<VertexId>(v)) == r_)
        r_end_items_.set(g_.item_id(Item::vertex(static_cast<VertexId>(v))));
    });
    for (VertexId v = 0; v < nv; ++v) {
      if (!p_.is_signer_vertex(v)) continue;
      if (p_.role_of(v) == r_) {
        honest_vertices_.push_back(v);
        continue;
      }
      adv_vertices_.push_back(v);
      Bitset gate = g_.empty_item_set();
      p_.pre_knowledge(v).for_each([&](std::size_t e) {
        if (p_.role_of(g_.edge(static_cast<EdgeId>(e)).src) == r_)
          gate.set(p_.item_of_edge(static_cast<EdgeId>(e)));
      });
      gate_.push_back(std::move(gate));
    }
  }

  SignerVerdict run() {
    Node root;
    root.items = presend_;
    root.contacted = g_.empty_vertex_set();
    saturate(root, nullptr);

    arena_.push_back({root, -1, {}});
    index_.insert(0);
    std::deque<std::uint32_t> work{0};

    while (!work.empty()) {
      std::uint32_t cur;
      if (opts_.order == ModelCheckOptions::Order::Dfs) {
        cur = work.back();
        work.pop_back();
      } else {
        cur = work.front();
        work.pop_front();
      }
      if (arena_[cur].node.decision == TtpReply::Signed) continue;

      auto moves = gen_moves(arena_[cur].node);
      if (opts_.order == ModelCheckOptions::Order::Dfs)
        std::reverse(moves.begin(), moves.end());
      for (const Move& m : moves) {
        Node child = arena_[cur].node;
        apply_move(child, m, nullptr);
        saturate(child, nullptr);
        std::uint32_t id = static_cast<std::uint32_t>(arena_.size());
        arena_.push_back({std::move(child), static_cast<int>(cur), m});
        auto [it, fresh] = index_.insert(id);
        if (!fresh) {
          arena_.pop_back();
          continue;
        }
        if (arena_.size() > opts_.max_states)
          throw MaxStatesExceeded(opts_.max_states);
        if (unfair(arena_[id].node)) return witness(id);
        work.push_back(id);
      }
    }
    SignerVerdict v;
    v.role = r_;
    v.fair = true;
    v.states_explored = arena_.size();
    return v;
  }

 private:
  struct Entry {
    Node node;
    int parent;
    Move via;
  };

  struct IndexHash {
    const std::vector<Entry>* arena;
    std::size_t operator()(std::uint32_t i) const {
      return (*arena)[i].node.hash();
    }
  };
  struct IndexEq {
    const std::vector<Entry>* arena;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      return (*arena)[a].node == (*arena)[b].node;
    }
  };

  bool honest_exited(const Node& n) const {
    return n.honest_reply != Reply::None;
  }

  // The vertex the honest signer exited from, if any.
  std::optional<VertexId> honest_exit_src(const Node& n) const {
    std::optional<VertexId> out;
    (n.items & frag_.exit_edge_items()).for_each([&](std::size_t i) {
      EdgeId e = g_.item(i).id;
      if (p_.role_of(g_.edge(e).src) == r_) out = g_.edge(e).src;
    });
    return out;
  }

  // Fires the honest signer's pending sends and eps edges, in canonical
  // order, as long as the signer's own contribution stays causally closed.
  void saturate(Node& n, std::vector<Step>* log) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t item : eager_) {
        if (n.items.test(item)) continue;
        if (!frag_.own_pred(item).subset_of(n.items)) continue;
        n.items.set(item);
        changed = true;
        if (log) {
          Item it = g_.item(item);
          log->push_back({kind_of_item(p_, it), it});
        }
      }
    }
  }

  std::vector<Move> gen_moves(const Node& n) {
    std::vector<Move> out;
    auto exit_src = honest_exit_src(n);

    for (VertexId v : honest_vertices_) {
      std::size_t vi = g_.item_id(Item::vertex(v));
      if (n.items.test(vi)) continue;
      if (exit_src && *exit_src == v) continue;
      if (!p_.in_items(v).subset_of(n.items)) continue;
      if (!frag_.own_pred(vi).subset_of(n.items)) continue;
      out.push_back({Move::Kind::HonestRecv, v});
    }
    for (EdgeId e : adv_sends_)
      if (!n.items.test(p_.item_of_edge(e)))
        out.push_back({Move::Kind::AdvSend, e});

    std::uint32_t contacted_roles = 0;
    n.contacted.for_each([&](std::size_t v) {
      contacted_roles |= 1u << p_.role_of(static_cast<VertexId>(v));
    });
    for (std::size_t i = 0; i < adv_vertices_.size(); ++i) {
      VertexId v = adv_vertices_[i];
      RoleId rv = p_.role_of(v);
      if ((contacted_roles | n.dishonest) & (1u << rv)) continue;
      if (!gate_[i].subset_of(n.items)) continue;
      Node scratch = n;
      apply_exit(scratch, v);
      if (scratch.dishonest & (1u << rv)) continue;
      out.push_back({Move::Kind::AdvExit, v});
    }
    if (!honest_exited(n))
      for (VertexId v : honest_vertices_)
        if (!n.items.test(g_.item_id(Item::vertex(v))))
          out.push_back({Move::Kind::HonestExit, v});
    return out;
  }

  void apply_exit(Node& n, VertexId v) {
    TtpState st = TtpState::initial(p_);
    st.decision = n.decision;
    st.contacted = n.contacted;
    st.dishonest = n.dishonest;
    TtpReply reply = delta0(p_, ResolveRequest::of(ResolveMsg::for_vertex(p_, v)), st);
    n.decision = st.decision;
    n.contacted = st.contacted;
    n.dishonest = st.dishonest;
    n.items.set(p_.item_of_edge(*p_.exit_edge(v)));
    if (p_.role_of(v) == r_)
      n.honest_reply = reply == TtpReply::Abort ? Reply::Abort : Reply::Signed;
  }

  void apply_move(Node& n, const Move& m, std::vector<Step>* log) {
    switch (m.kind) {
      case Move::Kind::HonestRecv: {
        n.items.set(g_.item_id(Item::vertex(m.id)));
        if (log) log->push_back({TransitionKind::Recv, Item::vertex(m.id)});
        break;
      }
      case Move::Kind::AdvSend: {
        n.items.set(p_.item_of_edge(m.id));
        if (log) log->push_back({TransitionKind::Send, Item::edge(m.id)});
        break;
      }
      case Move::Kind::AdvExit:
      case Move::Kind::HonestExit: {
        apply_exit(n, m.id);
        if (log)
          log->push_back({TransitionKind::Exit, Item::edge(*p_.exit_edge(m.id))});
        break;
      }
    }
  }

  // Unfair per the execution-fairness conditions: the overall decision is
  // an abort while the signer's signature is out, the signer holds no end
  // vertex, and its own contact was answered with an abort.
  bool unfair(const Node& n) const {
    bool c1 = n.decision == TtpReply::Abort && !n.items.intersects(r_sig_items_);
    bool c2 = n.items.intersects(r_end_items_);
    bool c3 = n.honest_reply != Reply::Abort;
    return !(c1 || c2 || c3);
  }

  SignerVerdict witness(std::uint32_t id) {
    std::vector<Move> moves;
    for (int cur = static_cast<int>(id); arena_[cur].parent >= 0;
         cur = arena_[cur].parent)
      moves.push_back(arena_[cur].via);
    std::reverse(moves.begin(), moves.end());

    // Rebuild the execution from the empty state: pre-sends first, then the
    // recorded branch moves with eager saturation in between.
    SignerVerdict v;
    v.role = r_;
    v.fair = false;
    v.states_explored = arena_.size();

    Execution rho;
    rho.start = g_.empty_item_set();
    presend_.for_each([&](std::size_t i) {
      rho.steps.push_back({TransitionKind::Send, g_.item(i)});
    });
    Node n;
    n.items = presend_;
    n.contacted = g_.empty_vertex_set();
    saturate(n, &rho.steps);
    for (const Move& m : moves) {
      apply_move(n, m, &rho.steps);
      saturate(n, &rho.steps);
      if (m.kind == Move::Kind::AdvExit || m.kind == Move::Kind::HonestExit)
        v.exit_order.push_back(m.id);
    }
    TtpReplay replay = replay_exits(p_, rho);
    v.ttp_replies = replay.replies;
    v.counterexample = std::move(rho);
    return v;
  }

  const Protocol& p_;
  const Dag& g_;
  RoleId r_;
  const Fragment& frag_;
  ModelCheckOptions opts_;

  std::vector<std::size_t> eager_;       // honest non-exit edge items
  std::vector<VertexId> honest_vertices_;
  std::vector<VertexId> adv_vertices_;
  std::vector<Bitset> gate_;             // per adv vertex, honest evidence
  std::vector<EdgeId> adv_sends_;        // dishonest signatures to honest
  Bitset presend_;
  Bitset r_sig_items_;
  Bitset r_end_items_;

  std::vector<Entry> arena_;
  std::unordered_set<std::uint32_t, IndexHash, IndexEq> index_{
      16, IndexHash{&arena_}, IndexEq{&arena_}};
};

}  // namespace

SignerVerdict model_check(const Protocol& p, RoleId signer,
                          const ModelCheckOptions& opts) {
  if (signer >= p.signer_count()) throw SpecError("not a signer role");
  Explorer ex(p, signer, opts);
  return ex.run();
}

FairnessReport check_protocol(const Protocol& p,
                              const ModelCheckOptions& opts) {
  FairnessReport report;
  for (RoleId r = 0; r < p.signer_count(); ++r) {
    report.signers.push_back(model_check(p, r, opts));
    report.states_explored += report.signers.back().states_explored;
    if (!report.signers.back().fair) report.fair = false;
  }
  return report;
}

}  // namespace mpcs
