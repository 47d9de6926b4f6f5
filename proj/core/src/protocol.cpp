// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/protocol.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mpcs {

namespace {

// Shared skeletal sanity checks; returns role index by name.
std::map<std::string, RoleId> check_skeletal(const SkeletalGraph& sk) {
  if (sk.signers.size() < 2)
    throw SpecError("protocol needs at least two signer roles");
  std::map<std::string, RoleId> roles;
  for (const auto& r : sk.signers) {
    if (r == Protocol::kTtpName)
      throw SpecError("role name 'T' is reserved for the TTP");
    if (!roles.emplace(r, static_cast<RoleId>(roles.size())).second)
      throw SpecError("duplicate signer role " + r);
  }
  std::map<std::string, std::string> role_of;
  std::vector<bool> used(roles.size(), false);
  for (const auto& v : sk.vertices) {
    if (v.name == Protocol::kTtpName)
      throw SpecError("vertex name 'T' is reserved for the TTP vertex");
    auto it = roles.find(v.role);
    if (it == roles.end())
      throw SpecError("vertex " + v.name + " has unknown role " + v.role);
    if (!role_of.emplace(v.name, v.role).second)
      throw SpecError("duplicate vertex " + v.name);
    used[it->second] = true;
  }
  for (const auto& [r, id] : roles)
    if (!used[id]) throw SpecError("signer role " + r + " has no vertices");
  for (const auto& e : sk.edges) {
    auto s = role_of.find(e.src), d = role_of.find(e.dst);
    if (s == role_of.end() || d == role_of.end())
      throw SpecError("edge " + e.src + "->" + e.dst +
                      " references an unknown vertex");
    if (e.eps && s->second != d->second)
      throw SpecError("eps edge " + e.src + "->" + e.dst +
                      " connects different roles");
  }
  return roles;
}

}  // namespace

Protocol Protocol::expand(const SkeletalGraph& sk) {
  auto roles = check_skeletal(sk);

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edge_names;
  for (const auto& v : sk.vertices) names.push_back(v.name);
  for (const auto& e : sk.edges) edge_names.emplace_back(e.src, e.dst);
  Dag base(names, edge_names);

  std::vector<RoleId> role_of(base.vertex_count());
  for (const auto& v : sk.vertices)
    role_of[*base.find(v.name)] = roles.at(v.role);

  // Close the graph under the transitivity condition: a causally ordered
  // pair either has an edge or an intermediate vertex from one of the two
  // endpoint roles. Added edges never change the causal order, so one pass
  // over the precomputed closure yields the unique minimal full graph.
  std::vector<std::pair<std::string, std::string>> full_edges = edge_names;
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    for (VertexId w = 0; w < base.vertex_count(); ++w) {
      if (!base.precedes(v, w) || base.find_edge(v, w)) continue;
      bool covered = false;
      for (VertexId u = 0; u < base.vertex_count() && !covered; ++u)
        if (base.precedes(v, u) && base.precedes(u, w) &&
            (role_of[u] == role_of[v] || role_of[u] == role_of[w]))
          covered = true;
      if (!covered)
        full_edges.emplace_back(base.name(v), base.name(w));
    }
  }

  names.push_back(kTtpName);
  for (const auto& v : sk.vertices) full_edges.emplace_back(v.name, kTtpName);

  Protocol p;
  p.name_ = sk.name;
  p.signer_names_ = sk.signers;
  p.dag_ = Dag(std::move(names), std::move(full_edges));
  p.role_of_.assign(p.dag_.vertex_count(), p.ttp_role());
  for (const auto& v : sk.vertices)
    p.role_of_[*p.dag_.find(v.name)] = roles.at(v.role);
  p.sigma_ = p.dag_.empty_vertex_set();
  for (const auto& v : sk.vertices)
    if (v.sign) p.sigma_.set(*p.dag_.find(v.name));
  p.finalize();
  return p;
}

Protocol Protocol::from_full(
    std::string name, std::vector<std::string> signers,
    std::vector<std::pair<std::string, std::string>> vertex_roles,
    std::vector<std::pair<std::string, std::string>> edges,
    std::vector<std::string> sigma) {
  if (signers.size() < 2)
    throw SpecError("protocol needs at least two signer roles");
  std::map<std::string, RoleId> roles;
  for (const auto& r : signers)
    if (!roles.emplace(r, static_cast<RoleId>(roles.size())).second)
      throw SpecError("duplicate signer role " + r);

  std::vector<std::string> names;
  for (const auto& [v, r] : vertex_roles) names.push_back(v);

  Protocol p;
  p.name_ = std::move(name);
  p.signer_names_ = std::move(signers);
  p.dag_ = Dag(std::move(names), std::move(edges));
  p.role_of_.assign(p.dag_.vertex_count(), p.ttp_role());
  for (const auto& [v, r] : vertex_roles) {
    auto vid = p.dag_.find(v);
    if (!vid) throw SpecError("unknown vertex " + v);
    if (r != kTtpName) {
      auto it = roles.find(r);
      if (it == roles.end()) throw SpecError("unknown role " + r);
      p.role_of_[*vid] = it->second;
    }
  }
  p.sigma_ = p.dag_.empty_vertex_set();
  for (const auto& v : sigma) {
    auto vid = p.dag_.find(v);
    if (!vid) throw SpecError("sigma names unknown vertex " + v);
    p.sigma_.set(*vid);
  }
  p.finalize();
  return p;
}

void Protocol::finalize() {
  const std::size_t nv = dag_.vertex_count();
  const std::size_t ne = dag_.edge_count();

  // Edge labels, in the fixed case order.
  labels_.resize(ne);
  message_edges_ = Bitset(ne);
  for (EdgeId e = 0; e < ne; ++e) {
    const Edge& ed = dag_.edge(e);
    if (role_of_[ed.src] == role_of_[ed.dst])
      labels_[e] = LabelKind::Epsilon;
    else if (role_of_[ed.dst] == ttp_role())
      labels_[e] = LabelKind::Exit;
    else if (sigma_.test(ed.src))
      labels_[e] = LabelKind::Signature;
    else
      labels_[e] = LabelKind::Promise;
    if (is_message(labels_[e])) message_edges_.set(e);
  }

  in_items_.assign(nv, dag_.empty_item_set());
  exit_edge_.assign(nv, std::nullopt);
  for (EdgeId e = 0; e < ne; ++e) {
    in_items_[dag_.edge(e).dst].set(item_of_edge(e));
    if (labels_[e] == LabelKind::Exit &&
        role_of_[dag_.edge(e).src] != ttp_role())
      exit_edge_[dag_.edge(e).src] = e;
  }

  // Knowledge sets: message edges into same-role vertices weakly (K) or
  // strictly (pre-knowledge) before v.
  knowledge_.assign(nv, Bitset(ne));
  pre_knowledge_.assign(nv, Bitset(ne));
  for (VertexId v = 0; v < nv; ++v) {
    if (!is_signer_vertex(v)) continue;
    for (EdgeId e = 0; e < ne; ++e) {
      if (!message_edges_.test(e)) continue;
      VertexId tgt = dag_.edge(e).dst;
      if (role_of_[tgt] != role_of_[v]) continue;
      if (dag_.precedes(tgt, v)) {
        knowledge_[v].set(e);
        pre_knowledge_[v].set(e);
      } else if (tgt == v) {
        knowledge_[v].set(e);
      }
    }
  }

  // Σ(P): Σ vertices that actually emit a message.
  signing_set_ = Bitset(nv);
  sigma_.for_each([&](std::size_t v) {
    for (EdgeId e : dag_.out_edges(static_cast<VertexId>(v)))
      if (message_edges_.test(e)) {
        signing_set_.set(v);
        break;
      }
  });

  // Initial set: the pre-knowledge of v, together with v's own role, does
  // not cover all signers. End set: all other signers' signatures are in
  // the knowledge of v.
  initial_set_ = Bitset(nv);
  end_set_ = Bitset(nv);
  const std::uint32_t all_roles =
      (signer_count() >= 32) ? ~0u : ((1u << signer_count()) - 1);
  for (VertexId v = 0; v < nv; ++v) {
    if (!is_signer_vertex(v)) continue;
    std::uint32_t pre_roles = 1u << role_of_[v];
    pre_knowledge_[v].for_each([&](std::size_t e) {
      pre_roles |= 1u << role_of_[dag_.edge(static_cast<EdgeId>(e)).src];
    });
    if (pre_roles != all_roles) initial_set_.set(v);

    std::uint32_t sig_roles = 1u << role_of_[v];
    knowledge_[v].for_each([&](std::size_t e) {
      VertexId src = dag_.edge(static_cast<EdgeId>(e)).src;
      if (signing_set_.test(src)) sig_roles |= 1u << role_of_[src];
    });
    if (sig_roles == all_roles) end_set_.set(v);
  }

  fragments_.clear();
  for (RoleId r = 0; r < signer_count(); ++r)
    fragments_.push_back(std::make_unique<Fragment>(*this, r));
}

const std::string& Protocol::role_name(RoleId r) const {
  static const std::string ttp = kTtpName;
  return r < signer_names_.size() ? signer_names_[r] : ttp;
}

std::optional<RoleId> Protocol::find_role(std::string_view name) const {
  for (RoleId r = 0; r < signer_names_.size(); ++r)
    if (signer_names_[r] == name) return r;
  return std::nullopt;
}

VertexId Protocol::ttp_vertex() const {
  std::optional<VertexId> found;
  for (VertexId v = 0; v < dag_.vertex_count(); ++v)
    if (role_of_[v] == ttp_role()) {
      if (found) throw SpecError("multiple TTP vertices");
      found = v;
    }
  if (!found) throw SpecError("no TTP vertex");
  return *found;
}

std::optional<EdgeId> Protocol::exit_edge(VertexId v) const {
  return exit_edge_[v];
}

std::string Protocol::label_text(EdgeId e) const {
  const Edge& ed = dag_.edge(e);
  switch (labels_[e]) {
    case LabelKind::Epsilon:
      return "eps";
    case LabelKind::Exit:
      return "exit";
    case LabelKind::Signature:
      return "sig(" + role_name(role_of_[ed.src]) + ")";
    case LabelKind::Promise:
      return "pcs(" + role_name(role_of_[ed.src]) + ",(" + name_ + "," +
             dag_.name(ed.src) + ")," + role_name(role_of_[ed.dst]) + ")";
  }
  return {};
}

const Bitset& Protocol::knowledge(VertexId v) const {
  if (!is_signer_vertex(v)) throw SpecError("knowledge of the TTP vertex");
  return knowledge_[v];
}

const Bitset& Protocol::pre_knowledge(VertexId v) const {
  if (!is_signer_vertex(v)) throw SpecError("knowledge of the TTP vertex");
  return pre_knowledge_[v];
}

Bitset Protocol::knowledge_of_set(const Bitset& vertices) const {
  Bitset out(dag_.edge_count());
  vertices.for_each([&](std::size_t v) { out |= knowledge_[v]; });
  return out;
}

Bitset Protocol::pre_knowledge_of_set(const Bitset& vertices) const {
  Bitset out(dag_.edge_count());
  vertices.for_each([&](std::size_t v) { out |= pre_knowledge_[v]; });
  return out;
}

std::vector<Violation> Protocol::validate() const {
  std::vector<Violation> out;
  const std::size_t nv = dag_.vertex_count();

  std::vector<VertexId> ttp_vertices;
  for (VertexId v = 0; v < nv; ++v)
    if (role_of_[v] == ttp_role()) ttp_vertices.push_back(v);
  if (ttp_vertices.size() != 1) {
    out.push_back({1, "expected exactly one TTP vertex, found " +
                          std::to_string(ttp_vertices.size())});
  } else {
    VertexId t = ttp_vertices.front();
    for (VertexId v = 0; v < nv; ++v)
      if (v != t && !dag_.find_edge(v, t))
        out.push_back({1, "missing exit edge " + dag_.name(v) + "->" +
                              dag_.name(t)});
  }

  for (VertexId v = 0; v < nv; ++v) {
    for (VertexId w = 0; w < nv; ++w) {
      if (!dag_.precedes(v, w) || dag_.find_edge(v, w)) continue;
      bool covered = false;
      for (VertexId u = 0; u < nv && !covered; ++u)
        if (dag_.precedes(v, u) && dag_.precedes(u, w) &&
            (role_of_[u] == role_of_[v] || role_of_[u] == role_of_[w]))
          covered = true;
      if (!covered)
        out.push_back({2, "ordered pair " + dag_.name(v) + " < " +
                              dag_.name(w) +
                              " lacks an edge and an intermediate"});
    }
  }

  for (EdgeId e = 0; e < dag_.edge_count(); ++e) {
    const Edge& ed = dag_.edge(e);
    LabelKind expect;
    if (role_of_[ed.src] == role_of_[ed.dst])
      expect = LabelKind::Epsilon;
    else if (role_of_[ed.dst] == ttp_role())
      expect = LabelKind::Exit;
    else if (sigma_.test(ed.src))
      expect = LabelKind::Signature;
    else
      expect = LabelKind::Promise;
    if (labels_[e] != expect)
      out.push_back({3, "edge " + dag_.edge_name(e) + " mislabeled"});
    if (labels_[e] == LabelKind::Epsilon &&
        role_of_[ed.src] != role_of_[ed.dst])
      out.push_back({3, "eps edge " + dag_.edge_name(e) + " crosses roles"});
  }

  if (signer_count() < 2)
    out.push_back({0, "fewer than two signer roles"});
  return out;
}

const Fragment& Protocol::fragment(RoleId signer) const {
  if (signer >= fragments_.size()) throw SpecError("not a signer role");
  return *fragments_[signer];
}

std::vector<std::pair<VertexId, VertexId>>
Protocol::necessary_condition_violations() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  initial_set_.for_each([&](std::size_t v) {
    signing_set_.for_each([&](std::size_t w) {
      if (end_set_.test(w)) return;
      if (role_of_[v] != role_of_[w]) return;
      if (!dag_.precedes(static_cast<VertexId>(v), static_cast<VertexId>(w)))
        out.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
    });
  });
  return out;
}

bool Protocol::single_component_without_ttp() const {
  const std::size_t nv = dag_.vertex_count();
  std::vector<VertexId> signer_vertices;
  for (VertexId v = 0; v < nv; ++v)
    if (is_signer_vertex(v)) signer_vertices.push_back(v);
  if (signer_vertices.empty()) return true;

  std::set<VertexId> seen{signer_vertices.front()};
  std::vector<VertexId> stack{signer_vertices.front()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto visit = [&](VertexId w) {
      if (is_signer_vertex(w) && seen.insert(w).second) stack.push_back(w);
    };
    for (EdgeId e : dag_.out_edges(v)) visit(dag_.edge(e).dst);
    for (EdgeId e : dag_.in_edges(v)) visit(dag_.edge(e).src);
  }
  return seen.size() == signer_vertices.size();
}

bool Protocol::is_optimistic() const {
  std::uint32_t covered = 0;
  end_set_.for_each(
      [&](std::size_t v) { covered |= 1u << role_of_[v]; });
  const std::uint32_t all =
      (signer_count() >= 32) ? ~0u : ((1u << signer_count()) - 1);
  return covered == all;
}

Fragment::Fragment(const Protocol& parent, RoleId role)
    : role_(role) {
  const Dag& g = parent.dag();
  items_ = g.empty_item_set();
  exit_items_ = g.empty_item_set();

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<VertexId> verts;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (parent.role_of(ed.src) != role && parent.role_of(ed.dst) != role)
      continue;
    items_.set(parent.item_of_edge(e));
    if (parent.label(e) == LabelKind::Exit)
      exit_items_.set(parent.item_of_edge(e));
    verts.insert(ed.src);
    verts.insert(ed.dst);
    edges.emplace_back(g.name(ed.src), g.name(ed.dst));
  }
  // A role whose vertices have no edges at all still owns those vertices.
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (parent.role_of(v) == role) verts.insert(v);
  for (VertexId v : verts) {
    items_.set(g.item_id(Item::vertex(v)));
    names.push_back(g.name(v));
  }

  Dag local(names, edges);
  // Translate the local predecessor sets back to global item ids.
  pred_.assign(g.item_count(), g.empty_item_set());
  auto global_item = [&](std::size_t local_item) {
    Item it = local.item(local_item);
    if (it.is_vertex) return g.item_id(Item::vertex(*g.find(local.name(it.id))));
    const Edge& ed = local.edge(it.id);
    VertexId s = *g.find(local.name(ed.src)), d = *g.find(local.name(ed.dst));
    return g.item_id(Item::edge(*g.find_edge(s, d)));
  };
  std::vector<std::size_t> to_global(local.item_count());
  for (std::size_t i = 0; i < local.item_count(); ++i)
    to_global[i] = global_item(i);
  for (std::size_t i = 0; i < local.item_count(); ++i) {
    Bitset& p = pred_[to_global[i]];
    local.item_preds(i).for_each(
        [&](std::size_t j) { p.set(to_global[j]); });
  }

  own_items_ = g.empty_item_set();
  items_.for_each([&](std::size_t i) {
    Item it = g.item(i);
    RoleId r = it.is_vertex ? parent.role_of(it.id)
                            : parent.role_of(g.edge(it.id).src);
    if (r == role) own_items_.set(i);
  });
  own_pred_.assign(g.item_count(), g.empty_item_set());
  items_.for_each(
      [&](std::size_t i) { own_pred_[i] = pred_[i] & own_items_; });
}

bool Fragment::own_closed(const Bitset& restricted_state) const {
  bool ok = true;
  (restricted_state & own_items_).for_each([&](std::size_t i) {
    if (ok && !own_pred_[i].subset_of(restricted_state)) ok = false;
  });
  return ok;
}

}  // namespace mpcs
