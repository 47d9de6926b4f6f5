// Copyright (c) the mpcs authors. Licensed under the Apache License,
// Version 2.0; see LICENSE or http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpcs/protocol.hpp"

namespace mpcs {

// The protocol families from the literature this library reproduces.
// Parameter meaning is family-specific: signers for butterfly,
// subcontractors for the contractor families; the rest are fixed shapes.
enum class Family {
  Linear2,
  Bcast2,
  Dag2,
  Linear3,
  Parallel3Unfair,
  Parallel3Fair,
  Butterfly,
  Contractor,
  TwoContractors,
  InroleContractor,
};

struct FamilySpec {
  Family family;
  unsigned n = 0;  // 0 = family default
};

const std::vector<std::string>& family_names();
std::optional<Family> family_from_name(std::string_view name);
const std::string& family_name(Family f);

// Builds the skeletal graph of the family; throws SpecError for an
// unsupported parameter.
SkeletalGraph generate(const FamilySpec& spec);

}  // namespace mpcs
