// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpcs/bitset.hpp"

namespace mpcs {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId src;
  VertexId dst;
};

// A vertex or an edge. Causal precedence extends to both sorts.
struct Item {
  static Item vertex(VertexId v) { return {true, v}; }
  static Item edge(EdgeId e) { return {false, e}; }

  bool is_vertex = true;
  std::uint32_t id = 0;

  bool operator==(const Item&) const = default;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable DAG over string-named vertices.
//
// Vertex ids follow the lexicographic order of the names, which fixes every
// enumeration order downstream (path lists, scheduler tie-breaks, reports).
// The strict causal order and the per-item predecessor sets are precomputed
// on construction; all queries are pure.
class Dag {
 public:
  Dag() = default;
  Dag(std::vector<std::string> vertex_names,
      std::vector<std::pair<std::string, std::string>> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t item_count() const { return names_.size() + edges_.size(); }

  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find(std::string_view name) const;
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> find_edge(VertexId src, VertexId dst) const;
  std::string edge_name(EdgeId e) const;

  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }

  // Strict causal precedence on vertices: a directed path exists.
  bool precedes(VertexId v, VertexId w) const { return succ_[v].test(w); }
  bool precedes_eq(VertexId v, VertexId w) const {
    return v == w || precedes(v, w);
  }

  // The extension of strict precedence to vertices and edges:
  //   (v,w) < (v',w')  iff  w <= v'
  //   v < (v',w')      iff  v <= v'
  //   (v,w) < v'       iff  w <= v'
  // Note v < (v,w) holds for an edge and its own source.
  bool precedes(Item x, Item y) const;

  std::size_t item_id(Item it) const {
    return it.is_vertex ? it.id : names_.size() + it.id;
  }
  Item item(std::size_t id) const {
    return id < names_.size()
               ? Item::vertex(static_cast<VertexId>(id))
               : Item::edge(static_cast<EdgeId>(id - names_.size()));
  }

  // Strict item-predecessors {y | y < x}, indices in the item universe.
  const Bitset& item_preds(std::size_t item_id) const {
    return item_preds_[item_id];
  }

  Bitset empty_item_set() const { return Bitset(item_count()); }
  Bitset empty_vertex_set() const { return Bitset(vertex_count()); }

  // Smallest causally closed superset of the given item set.
  Bitset causal_closure(const Bitset& items) const;
  bool is_causally_closed(const Bitset& items) const;

  // Vertices of s with no strict predecessor (resp. successor) in s.
  Bitset minset(const Bitset& vertex_set) const;
  Bitset maxset(const Bitset& vertex_set) const;

  // Every directed path from a vertex in `sources` to `target`, in
  // lexicographic order of the vertex-name sequence. A path of length zero
  // is reported when the target itself is a source. Exponential in the
  // worst case; callers stay at desk scale.
  std::vector<std::vector<VertexId>> paths(std::vector<VertexId> sources,
                                           VertexId target) const;

  // Canonical order used for scheduler tie-breaking: items keyed by
  // (source vertex, vertex-before-edge, edge target).
  bool item_less(Item a, Item b) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<Bitset> succ_;  // strict descendants per vertex
  std::vector<Bitset> pred_;  // strict ancestors per vertex
  std::vector<Bitset> item_preds_;
};

}  // namespace mpcs
