// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "mpcs/fairness.hpp"

namespace mpcs {

struct ModelCheckOptions {
  std::size_t max_states = 10'000'000;
  enum class Order { Dfs, Bfs };
  Order order = Order::Dfs;
};

struct MaxStatesExceeded : std::runtime_error {
  explicit MaxStatesExceeded(std::size_t cap)
      : std::runtime_error("state budget exceeded (" + std::to_string(cap) +
                           " states)") {}
};

// Explores all executions in which `signer` is honest and every other
// signer is controlled by the adversary, starting from the state where all
// promises of dishonest signers have been sent and the honest signer has
// done nothing. Reports unfair with the first execution (in search order)
// that violates execution fairness for the signer.
SignerVerdict model_check(const Protocol& p, RoleId signer,
                          const ModelCheckOptions& opts = {});

// Per-signer model check; fair iff fair for every signer.
FairnessReport check_protocol(const Protocol& p,
                              const ModelCheckOptions& opts = {});

}  // namespace mpcs
