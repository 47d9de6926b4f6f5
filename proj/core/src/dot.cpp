// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/dot.hpp"

#include <algorithm>
#include <sstream>

namespace mpcs {

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_dot(const SkeletalGraph& sk) {
  std::ostringstream out;
  out << "digraph " << quote(sk.name) << " {\n";
  out << "  rankdir=LR;\n  node [shape=circle];\n";
  auto vs = sk.vertices;
  std::sort(vs.begin(), vs.end(),
            [](const SkeletalVertex& a, const SkeletalVertex& b) {
              return a.name < b.name;
            });
  for (const auto& v : vs) {
    out << "  " << quote(v.name);
    if (v.sign) out << " [style=filled, fillcolor=gray]";
    out << ";\n";
  }
  auto es = sk.edges;
  std::sort(es.begin(), es.end(),
            [](const SkeletalEdge& a, const SkeletalEdge& b) {
              return a.src != b.src ? a.src < b.src : a.dst < b.dst;
            });
  for (const auto& e : es) {
    out << "  " << quote(e.src) << " -> " << quote(e.dst);
    if (e.eps) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Protocol& p, bool include_ttp) {
  const Dag& g = p.dag();
  std::ostringstream out;
  out << "digraph " << quote(p.name()) << " {\n";
  out << "  rankdir=LR;\n  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!include_ttp && !p.is_signer_vertex(v)) continue;
    out << "  " << quote(g.name(v));
    if (p.sigma().test(v))
      out << " [style=filled, fillcolor=gray]";
    else if (!p.is_signer_vertex(v))
      out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!include_ttp && p.label(e) == LabelKind::Exit) continue;
    const Edge& ed = g.edge(e);
    out << "  " << quote(g.name(ed.src)) << " -> " << quote(g.name(ed.dst));
    if (p.label(e) == LabelKind::Epsilon) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mpcs
