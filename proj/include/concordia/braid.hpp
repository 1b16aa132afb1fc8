#pragma once

#include <string>
#include <vector>

#include "concordia/pd.hpp"

namespace concordia {

// letters: nonzero ints, +i = generator i (strand at position i passes over
// position i+1), -i = its inverse; positions run 1..strands
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;
};

// whitespace/comma separated letters; strands defaults to max|letter|+1
BraidWord parse_braid(const std::string& text, int strands = 0);

LinkDiagram braid_closure(const BraidWord& w);

}  // namespace concordia
