// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/complexity.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mpcs {

std::size_t message_complexity(const Protocol& p) {
  return p.message_edges().count();
}

std::size_t parallel_complexity(const Protocol& p) {
  const Dag& g = p.dag();
  std::vector<EdgeId> msg;
  p.message_edges().for_each(
      [&](std::size_t e) { msg.push_back(static_cast<EdgeId>(e)); });
  // Process in an order compatible with the chain relation e < e' iff
  // dst(e) <= src(e'): ancestor counts of the destination are monotone
  // along it.
  std::vector<std::size_t> rank(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    rank[v] = g.item_preds(g.item_id(Item::vertex(v))).count();
  std::stable_sort(msg.begin(), msg.end(), [&](EdgeId a, EdgeId b) {
    return rank[g.edge(a).dst] < rank[g.edge(b).dst];
  });

  std::size_t best = 0;
  std::vector<std::size_t> len(g.edge_count(), 0);
  for (std::size_t i = 0; i < msg.size(); ++i) {
    std::size_t l = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (g.precedes_eq(g.edge(msg[j]).dst, g.edge(msg[i]).src))
        l = std::max(l, len[msg[j]] + 1);
    len[msg[i]] = l;
    best = std::max(best, l);
  }
  return best;
}

unsigned supersequence_lambda(unsigned n) {
  switch (n) {
    case 1:
    case 2:
    case 3:
    case 4:
      return shortest_supersequence_length(n);
    case 5:
      return 19;  // n^2 - 2n + 4, from the n^2+1 message-complexity minimum
    case 6:
      return 28;
    case 7:
      return 39;
    default:
      throw std::out_of_range("lambda only available for 1 <= n <= 7");
  }
}

std::pair<std::size_t, std::size_t> complexity_bounds(unsigned n) {
  if (n < 2) throw std::out_of_range("bounds need at least two signers");
  return {supersequence_lambda(n) + 2 * n - 3, n + 1};
}

ComplexityReport complexity_report(const Protocol& p) {
  ComplexityReport r;
  r.mc = message_complexity(p);
  r.pc = parallel_complexity(p);
  r.n_signers = static_cast<unsigned>(p.signer_count());
  try {
    auto [mc_min, pc_min] = complexity_bounds(r.n_signers);
    r.mc_lower_bound = mc_min;
    r.pc_lower_bound = pc_min;
    r.bounds_known = true;
  } catch (const std::out_of_range&) {
    r.bounds_known = false;
  }
  return r;
}

}  // namespace mpcs
