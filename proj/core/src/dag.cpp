// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/dag.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace mpcs {

Dag::Dag(std::vector<std::string> vertex_names,
         std::vector<std::pair<std::string, std::string>> edge_names) {
  std::sort(vertex_names.begin(), vertex_names.end());
  if (std::adjacent_find(vertex_names.begin(), vertex_names.end()) !=
      vertex_names.end())
    throw GraphError("duplicate vertex");
  names_ = std::move(vertex_names);

  auto lookup = [&](const std::string& n) -> VertexId {
    auto it = std::lower_bound(names_.begin(), names_.end(), n);
    if (it == names_.end() || *it != n)
      throw GraphError("edge endpoint not a vertex: " + n);
    return static_cast<VertexId>(it - names_.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(edge_names.size());
  for (const auto& [s, d] : edge_names) {
    VertexId sv = lookup(s), dv = lookup(d);
    if (sv == dv) throw GraphError("self-loop on " + s);
    edges.push_back({sv, dv});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].src == edges[i - 1].src && edges[i].dst == edges[i - 1].dst)
      throw GraphError("duplicate edge " + names_[edges[i].src] + "->" +
                       names_[edges[i].dst]);
  edges_ = std::move(edges);

  const std::size_t n = names_.size();
  in_.resize(n);
  out_.resize(n);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].src].push_back(e);
    in_[edges_[e].dst].push_back(e);
  }

  // Kahn topological order; doubles as the acyclicity check.
  std::vector<std::size_t> indeg(n);
  for (const auto& e : edges_) ++indeg[e.dst];
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<VertexId> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    topo.push_back(v);
    for (EdgeId e : out_[v])
      if (--indeg[edges_[e].dst] == 0) ready.push_back(edges_[e].dst);
  }
  if (topo.size() != n) throw GraphError("graph has a directed cycle");

  succ_.assign(n, Bitset(n));
  pred_.assign(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    VertexId v = *it;
    for (EdgeId e : out_[v]) {
      VertexId w = edges_[e].dst;
      succ_[v].set(w);
      succ_[v] |= succ_[w];
    }
  }
  for (VertexId v = 0; v < n; ++v)
    succ_[v].for_each([&](std::size_t w) { pred_[w].set(v); });

  // Item-level predecessor sets, derived from the vertex closure.
  item_preds_.assign(item_count(), Bitset(item_count()));
  // edges_below[v] = edges (a,b) with b <= v, i.e. edges strictly below v
  // and edges incoming to v itself.
  std::vector<Bitset> edges_below(n, Bitset(edges_.size()));
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    VertexId d = edges_[e].dst;
    edges_below[d].set(e);
    succ_[d].for_each([&](std::size_t v) { edges_below[v].set(e); });
  }
  auto fill = [&](Bitset& dst, const Bitset& vset, const Bitset& eset) {
    vset.for_each([&](std::size_t v) { dst.set(v); });
    eset.for_each([&](std::size_t e) { dst.set(n + e); });
  };
  for (VertexId v = 0; v < n; ++v)
    fill(item_preds_[v], pred_[v], edges_below[v]);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    VertexId s = edges_[e].src;
    Bitset vs = pred_[s];
    vs.set(s);
    Bitset es = edges_below[s];
    es.reset(e);  // an edge does not precede itself
    fill(item_preds_[n + e], vs, es);
  }
}

std::optional<VertexId> Dag::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

std::optional<EdgeId> Dag::find_edge(VertexId src, VertexId dst) const {
  for (EdgeId e : out_[src])
    if (edges_[e].dst == dst) return e;
  return std::nullopt;
}

std::string Dag::edge_name(EdgeId e) const {
  return names_[edges_[e].src] + "->" + names_[edges_[e].dst];
}

bool Dag::precedes(Item x, Item y) const {
  if (x.is_vertex && y.is_vertex) return precedes(x.id, y.id);
  if (x.is_vertex) return precedes_eq(x.id, edges_[y.id].src);
  if (y.is_vertex) return precedes_eq(edges_[x.id].dst, y.id);
  return x.id != y.id && precedes_eq(edges_[x.id].dst, edges_[y.id].src);
}

Bitset Dag::causal_closure(const Bitset& items) const {
  Bitset out = items;
  items.for_each([&](std::size_t i) { out |= item_preds_[i]; });
  return out;
}

bool Dag::is_causally_closed(const Bitset& items) const {
  bool closed = true;
  items.for_each([&](std::size_t i) {
    if (closed && !item_preds_[i].subset_of(items)) closed = false;
  });
  return closed;
}

Bitset Dag::minset(const Bitset& vertex_set) const {
  Bitset out(vertex_count());
  vertex_set.for_each([&](std::size_t v) {
    if (!pred_[v].intersects(vertex_set)) out.set(v);
  });
  return out;
}

Bitset Dag::maxset(const Bitset& vertex_set) const {
  Bitset out(vertex_count());
  vertex_set.for_each([&](std::size_t v) {
    if (!succ_[v].intersects(vertex_set)) out.set(v);
  });
  return out;
}

std::vector<std::vector<VertexId>> Dag::paths(std::vector<VertexId> sources,
                                              VertexId target) const {
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    cur.push_back(v);
    if (v == target) {
      out.push_back(cur);
    } else if (precedes(v, target)) {
      // out_[v] is sorted by destination id, i.e. by name.
      for (EdgeId e : out_[v]) self(self, edges_[e].dst);
    }
    cur.pop_back();
  };
  for (VertexId s : sources) dfs(dfs, s);
  return out;
}

bool Dag::item_less(Item a, Item b) const {
  auto key = [&](Item it) {
    return it.is_vertex
               ? std::tuple<VertexId, int, VertexId>{it.id, 0, 0}
               : std::tuple<VertexId, int, VertexId>{edges_[it.id].src, 1,
                                                     edges_[it.id].dst};
  };
  return key(a) < key(b);
}

}  // namespace mpcs
