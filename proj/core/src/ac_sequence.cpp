// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/ac_sequence.hpp"

#include <algorithm>

namespace mpcs {

namespace {

// Conditions 4 and 5 for a prospective last contact; returns the least
// admissible signing vertex.
std::optional<VertexId> closing_vertex(const Protocol& p, VertexId last) {
  const Dag& g = p.dag();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.precedes(v, last) && p.role_of(v) == p.role_of(last) &&
        p.end_set().test(v))
      return std::nullopt;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!p.signing_set().test(s) || p.end_set().test(s)) continue;
    if (p.role_of(s) != p.role_of(last)) continue;
    if (!g.precedes_eq(last, s)) return s;
  }
  return std::nullopt;
}

}  // namespace

bool is_ac_sequence(const Protocol& p, const AcSequence& ac) {
  const auto& vs = ac.contacts;
  if (vs.empty() || vs.size() > p.signer_count()) return false;
  for (VertexId v : vs)
    if (v >= p.dag().vertex_count() || !p.is_signer_vertex(v)) return false;

  if (!p.initial_set().test(vs.front())) return false;

  std::uint32_t roles = 0;
  for (VertexId v : vs) {
    std::uint32_t bit = 1u << p.role_of(v);
    if (roles & bit) return false;
    roles |= bit;
  }

  Bitset contacted = p.dag().empty_vertex_set();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    contacted.set(vs[i]);
    if (!hon(p, vs[i], contacted)) return false;
    if (i > 0 && !hon(p, vs[i - 1], contacted)) return false;
  }

  VertexId last = vs.back();
  for (VertexId v = 0; v < p.dag().vertex_count(); ++v)
    if (p.dag().precedes(v, last) && p.role_of(v) == p.role_of(last) &&
        p.end_set().test(v))
      return false;

  VertexId s = ac.sig_vertex;
  if (s >= p.dag().vertex_count()) return false;
  return p.signing_set().test(s) && !p.end_set().test(s) &&
         p.role_of(s) == p.role_of(last) && !p.dag().precedes_eq(last, s);
}

std::optional<AcSequence> find_ac_sequence(const Protocol& p) {
  const Dag& g = p.dag();
  std::vector<VertexId> prefix;
  Bitset contacted = g.empty_vertex_set();
  std::uint32_t roles = 0;

  auto dfs = [&](auto&& self) -> std::optional<AcSequence> {
    if (!prefix.empty()) {
      if (auto s = closing_vertex(p, prefix.back()))
        return AcSequence{prefix, *s};
    }
    if (prefix.size() == p.signer_count()) return std::nullopt;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!p.is_signer_vertex(v)) continue;
      std::uint32_t bit = 1u << p.role_of(v);
      if (roles & bit) continue;
      if (prefix.empty() && !p.initial_set().test(v)) continue;
      contacted.set(v);
      bool ok = hon(p, v, contacted) &&
                (prefix.empty() || hon(p, prefix.back(), contacted));
      if (ok) {
        prefix.push_back(v);
        roles |= bit;
        if (auto found = self(self)) return found;
        roles &= ~bit;
        prefix.pop_back();
      }
      contacted.reset(v);
    }
    return std::nullopt;
  };
  return dfs(dfs);
}

Execution ac_to_execution(const Protocol& p, const AcSequence& ac) {
  if (!is_ac_sequence(p, ac)) throw SpecError("not an AC sequence");
  const Dag& g = p.dag();
  const VertexId last = ac.contacts.back();
  const std::size_t last_item = g.item_id(Item::vertex(last));

  Execution rho;
  rho.start = g.empty_item_set();
  State state = rho.start;

  auto run_to = [&](const Bitset& target) {
    // Fire missing target items in causal-closure order, least item first.
    for (;;) {
      std::optional<Item> pick;
      (target - state).for_each([&](std::size_t i) {
        if (!g.item_preds(i).subset_of(state)) return;
        Item it = g.item(i);
        if (!pick || g.item_less(it, *pick)) pick = it;
      });
      if (!pick) break;
      state.set(g.item_id(*pick));
      rho.steps.push_back({kind_of_item(p, *pick), *pick});
    }
  };

  for (std::size_t i = 0; i < ac.contacts.size(); ++i) {
    Bitset closure_seed = g.empty_item_set();
    closure_seed.set(g.item_id(Item::vertex(ac.contacts[i])));
    closure_seed.set(g.item_id(Item::vertex(ac.sig_vertex)));
    Bitset target = g.causal_closure(closure_seed);
    // The last signer stays honest: its contact vertex is never received.
    target.reset(last_item);
    run_to(target);

    if (i + 1 == ac.contacts.size()) {
      // Make sure a signature actually left the signing vertex; the proof
      // needs the stranded signer to have sent one.
      bool sig_out = false;
      std::optional<EdgeId> sig_edge;
      for (EdgeId e : g.out_edges(ac.sig_vertex)) {
        if (p.label(e) != LabelKind::Signature) continue;
        if (state.test(p.item_of_edge(e))) sig_out = true;
        if (!sig_edge) sig_edge = e;
      }
      if (!sig_out) {
        if (!sig_edge) throw SpecError("signing vertex without signature");
        state.set(p.item_of_edge(*sig_edge));
        rho.steps.push_back({TransitionKind::Send, Item::edge(*sig_edge)});
      }
    }

    EdgeId ex = *p.exit_edge(ac.contacts[i]);
    state.set(p.item_of_edge(ex));
    rho.steps.push_back({TransitionKind::Exit, Item::edge(ex)});
  }
  return rho;
}

}  // namespace mpcs
