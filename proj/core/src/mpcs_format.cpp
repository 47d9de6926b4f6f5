// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#include "mpcs/mpcs_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mpcs {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

}  // namespace

SkeletalGraph parse_skeletal(std::string_view text) {
  SkeletalGraph sk;
  bool saw_protocol = false, saw_signers = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto fail = [&](std::size_t tok_idx, const std::string& msg) -> void {
      std::size_t col = tok_idx < toks.size() ? toks[tok_idx].column
                                              : line.size() + 1;
      throw ParseError(lineno, col, msg);
    };

    if (kw == "protocol") {
      if (saw_protocol) fail(0, "duplicate protocol declaration");
      if (toks.size() != 2) fail(0, "expected: protocol <name>");
      sk.name = toks[1].text;
      saw_protocol = true;
    } else if (kw == "signers") {
      if (saw_signers) fail(0, "duplicate signers declaration");
      if (toks.size() < 3) fail(0, "expected at least two signer roles");
      for (std::size_t i = 1; i < toks.size(); ++i)
        sk.signers.push_back(toks[i].text);
      saw_signers = true;
    } else if (kw == "vertex") {
      if (toks.size() < 3 || toks.size() > 4)
        fail(0, "expected: vertex <id> role=<r> [sign]");
      SkeletalVertex v;
      v.name = toks[1].text;
      if (toks[2].text.rfind("role=", 0) != 0)
        fail(2, "expected role=<r>");
      v.role = toks[2].text.substr(5);
      if (v.role.empty()) fail(2, "empty role");
      if (toks.size() == 4) {
        if (toks[3].text != "sign") fail(3, "unknown vertex flag");
        v.sign = true;
      }
      sk.vertices.push_back(std::move(v));
    } else if (kw == "edge") {
      if (toks.size() < 3 || toks.size() > 4)
        fail(0, "expected: edge <src> <dst> [eps]");
      SkeletalEdge e;
      e.src = toks[1].text;
      e.dst = toks[2].text;
      if (toks.size() == 4) {
        if (toks[3].text != "eps") fail(3, "unknown edge flag");
        e.eps = true;
      }
      sk.edges.push_back(std::move(e));
    } else {
      fail(0, "unknown declaration '" + kw + "'");
    }
  }
  if (!saw_protocol) throw ParseError(lineno, 1, "missing protocol line");
  if (!saw_signers) throw ParseError(lineno, 1, "missing signers line");

  // Surface structural errors with a line anchor where possible.
  try {
    (void)Protocol::expand(sk);
  } catch (const SpecError& e) {
    throw ParseError(lineno, 1, e.what());
  } catch (const GraphError& e) {
    throw ParseError(lineno, 1, e.what());
  }
  return sk;
}

SkeletalGraph load_skeletal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_skeletal(buf.str());
}

std::string serialize_skeletal(const SkeletalGraph& sk) {
  std::ostringstream out;
  out << "protocol " << sk.name << "\n";
  out << "signers";
  for (const auto& r : sk.signers) out << " " << r;
  out << "\n";
  auto vs = sk.vertices;
  std::sort(vs.begin(), vs.end(),
            [](const SkeletalVertex& a, const SkeletalVertex& b) {
              return a.name < b.name;
            });
  for (const auto& v : vs) {
    out << "vertex " << v.name << " role=" << v.role;
    if (v.sign) out << " sign";
    out << "\n";
  }
  auto es = sk.edges;
  std::sort(es.begin(), es.end(),
            [](const SkeletalEdge& a, const SkeletalEdge& b) {
              return a.src != b.src ? a.src < b.src : a.dst < b.dst;
            });
  for (const auto& e : es) {
    out << "edge " << e.src << " " << e.dst;
    if (e.eps) out << " eps";
    out << "\n";
  }
  return out.str();
}

}  // namespace mpcs
