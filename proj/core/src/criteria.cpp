// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/criteria.hpp"

#include <algorithm>

namespace mpcs {

bool has_in_role_parallelism(const Protocol& p) {
  const Dag& g = p.dag();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!p.is_signer_vertex(v)) continue;
    for (VertexId w = v + 1; w < g.vertex_count(); ++w)
      if (p.role_of(w) == p.role_of(v) && !g.precedes(v, w) &&
          !g.precedes(w, v))
        return true;
  }
  return false;
}

Bitset criterion_start_set(const Protocol& p) {
  const Dag& g = p.dag();
  Bitset out = g.empty_vertex_set();
  p.initial_set().for_each([&](std::size_t v) {
    bool maximal = true;
    p.initial_set().for_each([&](std::size_t w) {
      if (maximal && w != v &&
          p.role_of(static_cast<VertexId>(w)) ==
              p.role_of(static_cast<VertexId>(v)) &&
          g.precedes(static_cast<VertexId>(v), static_cast<VertexId>(w)))
        maximal = false;
    });
    if (maximal) out.set(v);
  });
  return out;
}

namespace {

// Ancestor counts give a topological order: u < v implies u has strictly
// fewer predecessors.
std::vector<VertexId> topo_vertices(const Dag& g) {
  std::vector<VertexId> order(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) order[v] = v;
  std::vector<std::size_t> rank(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    rank[v] = g.item_preds(g.item_id(Item::vertex(v))).count();
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
  return order;
}

std::vector<std::vector<RoleId>> other_role_permutations(const Protocol& p,
                                                         RoleId excluded) {
  std::vector<RoleId> roles;
  for (RoleId r = 0; r < p.signer_count(); ++r)
    if (r != excluded) roles.push_back(r);
  std::vector<std::vector<RoleId>> perms;
  do {
    perms.push_back(roles);
  } while (std::next_permutation(roles.begin(), roles.end()));
  return perms;
}

// Longest matched prefix of pi over any path from the start set to each
// vertex; -1 where no such path exists.
std::vector<int> match_dp(const Protocol& p, const Bitset& start,
                          const std::vector<RoleId>& pi) {
  const Dag& g = p.dag();
  auto advance = [&](int k, RoleId role) {
    return (k < static_cast<int>(pi.size()) && pi[k] == role) ? k + 1 : k;
  };
  std::vector<int> m(g.vertex_count(), -1);
  for (VertexId v : topo_vertices(g)) {
    int best = start.test(v) ? 0 : -1;
    for (EdgeId e : g.in_edges(v))
      best = std::max(best, m[g.edge(e).src]);
    if (best >= 0) m[v] = advance(best, p.role_of(v));
  }
  return m;
}

bool path_contains(const Protocol& p, const std::vector<VertexId>& path,
                   const std::vector<RoleId>& pi) {
  std::size_t k = 0;
  for (VertexId v : path)
    if (k < pi.size() && p.role_of(v) == pi[k]) ++k;
  return k == pi.size();
}

}  // namespace

std::vector<PermutationFailure> check_permutation_necessary(
    const Protocol& p) {
  std::vector<PermutationFailure> failures;
  const Bitset start = criterion_start_set(p);
  p.signing_set().for_each([&](std::size_t sv) {
    VertexId v = static_cast<VertexId>(sv);
    for (const auto& pi : other_role_permutations(p, p.role_of(v))) {
      auto m = match_dp(p, start, pi);
      if (m[v] != static_cast<int>(pi.size()))
        failures.push_back({v, pi});
    }
  });
  return failures;
}

SufficiencyResult check_permutation_sufficient(const Protocol& p) {
  SufficiencyResult res;
  if (has_in_role_parallelism(p)) return res;
  res.applicable = true;

  const Bitset start = criterion_start_set(p);
  std::vector<VertexId> sources;
  start.for_each(
      [&](std::size_t v) { sources.push_back(static_cast<VertexId>(v)); });

  for (RoleId r = 0; r < p.signer_count(); ++r) {
    bool any = false, all_covered = true;
    p.signing_set().for_each([&](std::size_t sv) {
      VertexId v = static_cast<VertexId>(sv);
      if (p.role_of(v) != r) return;
      any = true;
      if (!all_covered) return;
      auto paths = p.dag().paths(sources, v);
      for (const auto& pi : other_role_permutations(p, r)) {
        bool found = false;
        for (const auto& path : paths)
          if (path_contains(p, path, pi)) {
            found = true;
            break;
          }
        if (!found) {
          all_covered = false;
          break;
        }
      }
    });
    if (any) res.claims.push_back({r, all_covered});
  }
  return res;
}

}  // namespace mpcs
