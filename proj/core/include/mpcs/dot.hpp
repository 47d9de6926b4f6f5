// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>

#include "mpcs/protocol.hpp"

namespace mpcs {

// Graphviz renderings following the paper-style conventions: eps edges
// dashed, signing-set candidates shaded. The TTP vertex and the exit edges
// are left out unless asked for.
std::string to_dot(const SkeletalGraph& sk);
std::string to_dot(const Protocol& p, bool include_ttp = false);

}  // namespace mpcs
