// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/semantics.hpp"

#include <algorithm>
#include <functional>

namespace mpcs {

TransitionKind kind_of_item(const Protocol& p, Item it) {
  if (it.is_vertex) return TransitionKind::Recv;
  switch (p.label(it.id)) {
    case LabelKind::Epsilon:
      return TransitionKind::Eps;
    case LabelKind::Exit:
      return TransitionKind::Exit;
    default:
      return TransitionKind::Send;
  }
}

std::vector<Step> enabled(const Protocol& p, const State& s) {
  const Dag& g = p.dag();
  std::vector<Step> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (s.test(g.item_id(Item::vertex(v)))) continue;
    if (p.in_items(v).subset_of(s))
      out.push_back({TransitionKind::Recv, Item::vertex(v)});
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Item it = Item::edge(e);
    if (s.test(g.item_id(it))) continue;
    switch (p.label(e)) {
      case LabelKind::Epsilon:
        if (s.test(g.item_id(Item::vertex(g.edge(e).src))))
          out.push_back({TransitionKind::Eps, it});
        break;
      case LabelKind::Exit:
        out.push_back({TransitionKind::Exit, it});
        break;
      default:
        out.push_back({TransitionKind::Send, it});
        break;
    }
  }
  std::sort(out.begin(), out.end(), [&](const Step& a, const Step& b) {
    return g.item_less(a.item, b.item);
  });
  return out;
}

bool is_enabled(const Protocol& p, const State& s, const Step& step) {
  const Dag& g = p.dag();
  if (s.test(g.item_id(step.item))) return false;
  if (step.item.is_vertex)
    return step.kind == TransitionKind::Recv &&
           p.in_items(step.item.id).subset_of(s);
  if (step.kind != kind_of_item(p, step.item)) return false;
  if (step.kind == TransitionKind::Eps)
    return s.test(g.item_id(Item::vertex(g.edge(step.item.id).src)));
  return true;
}

State apply(const Protocol& p, const State& s, const Step& step) {
  if (!is_enabled(p, s, step))
    throw SemanticsError("transition not enabled: " + step_text(p, step));
  State out = s;
  out.set(p.dag().item_id(step.item));
  return out;
}

std::vector<State> execution_states(const Protocol& p, const Execution& rho) {
  std::vector<State> states{rho.start};
  for (const Step& st : rho.steps) states.push_back(apply(p, states.back(), st));
  return states;
}

bool is_valid_execution(const Protocol& p, const Execution& rho) {
  try {
    execution_states(p, rho);
    return true;
  } catch (const SemanticsError&) {
    return false;
  }
}

State final_state(const Protocol& p, const Execution& rho) {
  State s = rho.start;
  for (const Step& st : rho.steps) s.set(p.dag().item_id(st.item));
  return s;
}

Execution restrict_execution(const Protocol& p, const Execution& rho,
                             RoleId signer) {
  const Fragment& frag = p.fragment(signer);
  Execution out;
  out.start = frag.restrict_state(rho.start);
  for (const Step& st : rho.steps)
    if (frag.contains_item(p.dag().item_id(st.item))) out.steps.push_back(st);
  return out;
}

bool is_valid_fragment_execution(const Protocol& p, const Fragment& frag,
                                 const Execution& rho) {
  const Dag& g = p.dag();
  State s = rho.start;
  if (!s.subset_of(frag.items())) return false;
  for (const Step& st : rho.steps) {
    std::size_t id = g.item_id(st.item);
    if (!frag.contains_item(id) || s.test(id)) return false;
    if (st.item.is_vertex) {
      if (st.kind != TransitionKind::Recv) return false;
      // Receive precondition relative to the fragment: its own in-edges.
      Bitset in = p.in_items(st.item.id) & frag.items();
      if (!in.subset_of(s)) return false;
    } else {
      if (st.kind != kind_of_item(p, st.item)) return false;
      if (st.kind == TransitionKind::Eps &&
          !s.test(g.item_id(Item::vertex(g.edge(st.item.id).src))))
        return false;
    }
    s.set(id);
  }
  return true;
}

bool is_honest(const Protocol& p, const Execution& rho, RoleId signer) {
  const Fragment& frag = p.fragment(signer);
  const Dag& g = p.dag();
  Execution rr = restrict_execution(p, rho, signer);

  State s = rr.start;
  std::size_t i = 0;
  for (;;) {
    Bitset exits = s & frag.exit_edge_items();
    std::size_t n_exit = exits.count();
    if (n_exit > 1) return false;
    if (n_exit == 1) {
      std::size_t exit_item = exits.members().front();
      EdgeId e = g.item(exit_item).id;
      VertexId src = g.edge(e).src;
      if (s.test(g.item_id(Item::vertex(src)))) return false;
      Bitset rest = s;
      rest.reset(exit_item);
      if (!frag.own_closed(rest)) return false;
    } else if (!frag.own_closed(s)) {
      return false;
    }
    if (i == rr.steps.size()) break;
    s.set(g.item_id(rr.steps[i].item));
    ++i;
  }
  return true;
}

bool is_closed(const Protocol& p, const Execution& rho) {
  if (!is_valid_execution(p, rho)) return false;
  for (const State& s : execution_states(p, rho))
    if (!p.dag().is_causally_closed(s)) return false;
  for (const Step& st : rho.steps)
    if (st.kind == TransitionKind::Exit) return false;
  for (const Step& st : enabled(p, final_state(p, rho)))
    if (st.kind != TransitionKind::Exit) return false;
  return true;
}

namespace {

// Non-exit steps enabled at s whose target stays causally closed.
std::vector<Step> closure_moves(const Protocol& p, const State& s) {
  std::vector<Step> out;
  for (const Step& st : enabled(p, s)) {
    if (st.kind == TransitionKind::Exit) continue;
    if (p.dag().item_preds(p.dag().item_id(st.item)).subset_of(s))
      out.push_back(st);
  }
  return out;
}

Execution run_closed(const Protocol& p,
                     const std::function<std::size_t(std::size_t)>& pick) {
  Execution rho;
  rho.start = p.dag().empty_item_set();
  State s = rho.start;
  for (;;) {
    auto moves = closure_moves(p, s);
    if (moves.empty()) break;
    const Step& st = moves[pick(moves.size())];
    s.set(p.dag().item_id(st.item));
    rho.steps.push_back(st);
  }
  // Every non-exit item must have fired; otherwise the optimistic run
  // deadlocked, which indicates a malformed specification. TTP vertices are
  // never receivable in an exit-free run.
  std::size_t expected = 0;
  for (EdgeId e = 0; e < p.dag().edge_count(); ++e)
    if (p.label(e) != LabelKind::Exit) ++expected;
  for (VertexId v = 0; v < p.dag().vertex_count(); ++v)
    if (p.is_signer_vertex(v)) ++expected;
  if (rho.steps.size() != expected)
    throw SemanticsError("optimistic run deadlocked in " + p.name());
  return rho;
}

}  // namespace

Execution closed_execution(const Protocol& p) {
  return run_closed(p, [](std::size_t) { return 0; });
}

Execution random_closed_execution(const Protocol& p, std::mt19937& rng) {
  return run_closed(p, [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  });
}

std::size_t send_count(const Execution& rho) {
  return static_cast<std::size_t>(
      std::count_if(rho.steps.begin(), rho.steps.end(), [](const Step& s) {
        return s.kind == TransitionKind::Send;
      }));
}

std::string step_text(const Protocol& p, const Step& s) {
  const char* label = nullptr;
  switch (s.kind) {
    case TransitionKind::Eps:
      label = "eps";
      break;
    case TransitionKind::Send:
      label = "send";
      break;
    case TransitionKind::Recv:
      label = "recv";
      break;
    case TransitionKind::Exit:
      label = "exit";
      break;
  }
  std::string item = s.item.is_vertex ? p.dag().name(s.item.id)
                                      : p.dag().edge_name(s.item.id);
  return std::string(label) + " " + item;
}

std::string format_trace(const Protocol& p, const Execution& rho) {
  std::string out;
  for (const Step& s : rho.steps) {
    out += step_text(p, s);
    out += '\n';
  }
  return out;
}

}  // namespace mpcs
