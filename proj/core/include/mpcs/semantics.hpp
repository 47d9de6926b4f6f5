// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <random>
#include <string>
#include <vector>

#include "mpcs/protocol.hpp"

namespace mpcs {

// A state is the set of executed items: vertices stand for completed
// receive events, edges for completed send/eps/exit events.
using State = Bitset;

enum class TransitionKind : std::uint8_t { Eps, Send, Recv, Exit };

struct Step {
  TransitionKind kind;
  Item item;

  bool operator==(const Step&) const = default;
};

// An execution: a start state plus the fired transitions. Intermediate
// states are derived (each step adds exactly its witness item).
struct Execution {
  State start;
  std::vector<Step> steps;
};

struct SemanticsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TransitionKind kind_of_item(const Protocol& p, Item it);

// The enabled transitions of a state, in canonical item order:
//   recv v   iff in(v) subset of s and v not in s
//   send e   iff e is a message edge and e not in s
//   eps  e   iff e is an eps edge, src(e) in s, e not in s
//   exit e   iff e is an exit edge and e not in s
std::vector<Step> enabled(const Protocol& p, const State& s);

bool is_enabled(const Protocol& p, const State& s, const Step& step);
State apply(const Protocol& p, const State& s, const Step& step);

// All states of the execution, start first; throws on an illegal step.
std::vector<State> execution_states(const Protocol& p, const Execution& rho);
bool is_valid_execution(const Protocol& p, const Execution& rho);
State final_state(const Protocol& p, const Execution& rho);

// Restriction of an execution to a signer role: states are intersected with
// the fragment's items and stuttering steps dropped.
Execution restrict_execution(const Protocol& p, const Execution& rho,
                             RoleId signer);

// Validity of a (restricted) execution against a fragment's own rules.
bool is_valid_fragment_execution(const Protocol& p, const Fragment& frag,
                                 const Execution& rho);

// Honesty of a signer in an execution: every state of the restricted
// execution has at most one exit edge, exit-free states are causally closed
// in the fragment, and a state with exit edge (v,w) omits v and is closed
// once the exit edge is dropped.
bool is_honest(const Protocol& p, const Execution& rho, RoleId signer);

// Closed executions: causally closed states, no exits, not extensible by a
// non-exit transition.
bool is_closed(const Protocol& p, const Execution& rho);

// Canonical closed execution: repeatedly fire the least enabled non-exit
// transition whose target state stays causally closed. Throws if the run
// deadlocks before exhausting the non-exit items.
Execution closed_execution(const Protocol& p);

// Like above with random tie-breaking; used to exercise the send-count
// invariance of closed executions.
Execution random_closed_execution(const Protocol& p, std::mt19937& rng);

std::size_t send_count(const Execution& rho);

// One `<label> <item>` line per step.
std::string format_trace(const Protocol& p, const Execution& rho);
std::string step_text(const Protocol& p, const Step& s);

}  // namespace mpcs
