// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstddef>
#include <utility>

#include "mpcs/protocol.hpp"

namespace mpcs {

// Number of message edges: the send count of every closed execution.
std::size_t message_complexity(const Protocol& p);

// Length of the longest chain of causally related message edges.
std::size_t parallel_complexity(const Protocol& p);

// Exact length of the shortest sequence over n symbols containing every
// permutation of the n symbols as a subsequence. Searched exactly for
// n <= 4; for 5 <= n <= 7 the values are tabulated, back-derived from the
// minimal message complexity n^2+1 of fair protocols for 2 < n < 8 (so
// best-effort beyond the searched range). Throws for other n.
unsigned supersequence_lambda(unsigned n);

// Exhaustive branch-and-bound search used for the small lambda values.
unsigned shortest_supersequence_length(unsigned n);

// Lower bounds (minimal message complexity, minimal parallel complexity)
// for a fair protocol with n signers: (lambda(n)+2n-3, n+1).
std::pair<std::size_t, std::size_t> complexity_bounds(unsigned n);

struct ComplexityReport {
  std::size_t mc = 0;
  std::size_t pc = 0;
  std::size_t mc_lower_bound = 0;
  std::size_t pc_lower_bound = 0;
  unsigned n_signers = 0;
  bool bounds_known = false;  // lambda available for this signer count
};

ComplexityReport complexity_report(const Protocol& p);

}  // namespace mpcs
