// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpcs/dag.hpp"

namespace mpcs {

using RoleId = std::uint32_t;

// Edge labels of a full protocol graph. Payloads are implicit: a Promise on
// edge (v,w) stands for the promise of role(v) bound to (contract, v), a
// Signature for sig_{role(v)}(contract). Messages are symbolic throughout;
// no cryptography is modeled.
enum class LabelKind : std::uint8_t { Epsilon, Exit, Signature, Promise };

inline bool is_message(LabelKind k) {
  return k == LabelKind::Signature || k == LabelKind::Promise;
}

struct SkeletalVertex {
  std::string name;
  std::string role;
  bool sign = false;  // Σ membership
};

struct SkeletalEdge {
  std::string src;
  std::string dst;
  bool eps = false;
};

// The authoring form of a protocol: signer vertices and edges only, no TTP
// vertex, no exit edges. Expansion produces the full graph.
struct SkeletalGraph {
  std::string name;
  std::vector<std::string> signers;
  std::vector<SkeletalVertex> vertices;
  std::vector<SkeletalEdge> edges;
};

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A failed full-graph well-formedness condition. `condition` is 1..4 for the
// structural conditions of the protocol class, 0 for type invariants.
struct Violation {
  int condition;
  std::string detail;
};

class Protocol;

// Restriction of a protocol to one signer role: the edges touching the role
// and their endpoints, with the causal order recomputed on the restricted
// graph. Honesty of an agent is judged against this fragment.
class Fragment {
 public:
  Fragment(const Protocol& parent, RoleId role);

  RoleId role() const { return role_; }
  const Bitset& items() const { return items_; }  // global item ids
  bool contains_item(std::size_t global_item) const {
    return items_.test(global_item);
  }
  // Strict predecessors in the fragment's own causal order, as global ids.
  const Bitset& pred(std::size_t global_item) const {
    return pred_[global_item];
  }
  const Bitset& exit_edge_items() const { return exit_items_; }

  // The signer's own contribution: its vertices and the edges it sources.
  // Honesty constrains these; incoming traffic is the peers' business.
  const Bitset& own_items() const { return own_items_; }
  const Bitset& own_pred(std::size_t global_item) const {
    return own_pred_[global_item];
  }

  Bitset restrict_state(const Bitset& items) const { return items & items_; }
  // Causal closure of the signer's own items within the fragment order.
  bool own_closed(const Bitset& restricted_state) const;

 private:
  RoleId role_;
  Bitset items_;
  Bitset exit_items_;
  Bitset own_items_;
  std::vector<Bitset> pred_;
  std::vector<Bitset> own_pred_;
};

// An immutable full DAG MPCS protocol specification: the role-labeled DAG
// with the TTP vertex, edge labels, the Σ candidate set, and the derived
// knowledge/initial/end/signing sets, all precomputed.
class Protocol {
 public:
  static constexpr const char* kTtpName = "T";

  // Expands a skeletal graph to the unique minimal full graph: for every
  // causally ordered pair v < w with no edge and no intermediate vertex of
  // either endpoint's role, the edge (v,w) is added; labels follow the case
  // order epsilon / exit / signature / promise; the TTP vertex and one exit
  // edge per signer vertex are appended.
  static Protocol expand(const SkeletalGraph& sk);

  // Builds a full graph as given (vertices carry role names, "T" marks the
  // TTP role; edges must already include any exit edges). Labels are still
  // derived from the structure. Use validate() to check the conditions.
  static Protocol from_full(
      std::string name, std::vector<std::string> signers,
      std::vector<std::pair<std::string, std::string>> vertex_roles,
      std::vector<std::pair<std::string, std::string>> edges,
      std::vector<std::string> sigma);

  const std::string& name() const { return name_; }
  const Dag& dag() const { return dag_; }

  std::size_t signer_count() const { return signer_names_.size(); }
  RoleId ttp_role() const { return static_cast<RoleId>(signer_names_.size()); }
  const std::string& role_name(RoleId r) const;
  std::optional<RoleId> find_role(std::string_view name) const;

  RoleId role_of(VertexId v) const { return role_of_[v]; }
  bool is_signer_vertex(VertexId v) const { return role_of_[v] != ttp_role(); }
  VertexId ttp_vertex() const;  // throws unless exactly one TTP vertex

  LabelKind label(EdgeId e) const { return labels_[e]; }
  bool is_message_edge(EdgeId e) const { return is_message(labels_[e]); }
  const Bitset& message_edges() const { return message_edges_; }  // edge ids
  std::optional<EdgeId> exit_edge(VertexId v) const;
  std::string label_text(EdgeId e) const;  // symbolic rendering

  // Σ as authored, and the derived sets (vertex bitsets).
  const Bitset& sigma() const { return sigma_; }
  const Bitset& signing_set() const { return signing_set_; }
  const Bitset& initial_set() const { return initial_set_; }
  const Bitset& end_set() const { return end_set_; }

  // Knowledge K(v) and pre-knowledge of a signer vertex, as edge bitsets:
  // message edges into same-role vertices weakly (resp. strictly) before v.
  const Bitset& knowledge(VertexId v) const;
  const Bitset& pre_knowledge(VertexId v) const;
  Bitset knowledge_of_set(const Bitset& vertices) const;
  Bitset pre_knowledge_of_set(const Bitset& vertices) const;

  // Incoming edges of v as an item bitset (receive precondition).
  const Bitset& in_items(VertexId v) const { return in_items_[v]; }

  std::size_t item_of_edge(EdgeId e) const {
    return dag_.item_id(Item::edge(e));
  }

  std::vector<Violation> validate() const;

  const Fragment& fragment(RoleId signer) const;

  // Lint for the necessary fairness condition on Init vs signing vertices:
  // returns pairs (v, w), v in Init, w in Σ(P)\End of the same role, with
  // not v < w.
  std::vector<std::pair<VertexId, VertexId>> necessary_condition_violations()
      const;

  // True when dropping the TTP vertex leaves one weakly connected component.
  bool single_component_without_ttp() const;

  // Optimistic protocols hand every signer all signatures in the undisturbed
  // run: each signer role owns an end-set vertex.
  bool is_optimistic() const;

 private:
  Protocol() = default;
  void finalize();

  std::string name_;
  std::vector<std::string> signer_names_;
  Dag dag_;
  std::vector<RoleId> role_of_;
  std::vector<LabelKind> labels_;
  Bitset sigma_;
  Bitset message_edges_;
  Bitset signing_set_;
  Bitset initial_set_;
  Bitset end_set_;
  std::vector<Bitset> knowledge_;
  std::vector<Bitset> pre_knowledge_;
  std::vector<Bitset> in_items_;
  std::vector<std::optional<EdgeId>> exit_edge_;
  std::vector<std::unique_ptr<Fragment>> fragments_;
};

}  // namespace mpcs
