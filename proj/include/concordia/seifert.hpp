#pragma once

#include <string>
#include <vector>

#include "concordia/poly.hpp"
#include "concordia/rational.hpp"

namespace concordia {

// Seifert matrix of a knot: square integer matrix V with det(V - V^T) = 1.
// The empty matrix is the unknot.
struct SeifertMatrix {
  std::vector<std::vector<Int>> v;

  int size() const { return static_cast<int>(v.size()); }
  Int at(int i, int j) const { return v[i][j]; }
  std::string str() const;
};

// Throws PreconditionError when the matrix is not square or the pairing
// condition det(V - V^T) = 1 fails.
void validate_seifert(const SeifertMatrix& m);

// Builtins by name: unknot, trefoil_rh, trefoil_lh, figure8, and connected
// sums of those joined with '#', e.g. "trefoil_rh#trefoil_rh".
SeifertMatrix seifert_from_name(const std::string& name);

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// Accepts a JSON array of arrays of integers, or a plain whitespace grid
// with one row per line.
SeifertMatrix parse_seifert(const std::string& text);

// det(V - x V^T), degree <= size.
IntPoly seifert_alexander(const SeifertMatrix& m);

// Arf invariant via the determinant criterion: 0 iff |det(V + V^T)|
// is congruent to +-1 mod 8.
int arf(const SeifertMatrix& m);

} // namespace concordia
