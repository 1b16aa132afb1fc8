#pragma once

#include <string>
#include <vector>

#include "concordia/pd.hpp"

namespace concordia {

struct AbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;  // "0", "Z", "Z^2 + Z/3", ...
};

using IntMatrix = std::vector<std::vector<Int>>;

// diagonal of the Smith form: nonnegative d1 | d2 | ... (zeros trail)
std::vector<Int> smith_diagonal(IntMatrix a);

// Z^cols modulo the row space of a
AbelianGroup cokernel(const IntMatrix& a, int cols);

// second lower-central quotient of the link group, presented on the basic
// commutators of the meridians with one longitude relation per component
AbelianGroup lcs2_quotient(const LinkingMatrix& lm);

}  // namespace concordia
