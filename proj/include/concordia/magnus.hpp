#pragma once

#include <vector>

#include "concordia/group.hpp"
#include "concordia/pd.hpp"

namespace concordia {

// longitude coefficient in the truncated free algebra, with its gcd
// indeterminacy from shorter invariants
struct MilnorValue {
  std::vector<int> index;  // 1-based component indices, last = longitude
  Int raw = 0;
  Int indeterminacy = 0;   // 0 = fully determined
  Int value = 0;           // raw reduced into [0, indeterminacy) when positive
};

// index length 2 or 3; throws PreconditionError otherwise
MilnorValue milnor_mu(const LinkDiagram& d, const std::vector<int>& index);

}  // namespace concordia
