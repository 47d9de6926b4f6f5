// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>
#include <string_view>

#include "mpcs/protocol.hpp"

namespace mpcs {

// Skeletal-graph text format, one declaration per line, '#' to end of line:
//   protocol <name>
//   signers <r1> <r2> ...
//   vertex <id> role=<r> [sign]
//   edge <src> <dst> [eps]
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line;
  std::size_t column;
};

SkeletalGraph parse_skeletal(std::string_view text);
SkeletalGraph load_skeletal_file(const std::string& path);
std::string serialize_skeletal(const SkeletalGraph& sk);

}  // namespace mpcs
