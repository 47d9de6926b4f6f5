// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpcs::cli {

// Runs one CLI invocation. Exit codes: 0 fair / no finding, 1 unfair or AC
// sequence found, 2 input error, 3 state budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mpcs::cli
