#include "concordia/snf.hpp"

#include <algorithm>
#include <sstream>

namespace concordia {

std::vector<Int> smith_diagonal(IntMatrix a) {
  int rows = a.size();
  int cols = rows ? a[0].size() : 0;
  std::vector<Int> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 &&
            (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) {
        Int q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
    for (int j = t + 1; j < cols; ++j)
      if (a[t][j] != 0) {
        Int q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainder became available, re-pivot
    // pivot must divide everything below-right
    bool fixed = false;
    for (int i = t + 1; i < rows && !fixed; ++i)
      for (int j = t + 1; j < cols && !fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int k = t; k < cols; ++k) a[t][k] += a[i][k];
          fixed = true;
        }
    if (fixed) continue;
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  // invariant factor chain is automatic with the divisibility sweep above
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    if (diag[i + 1] % diag[i] != 0)
      throw InternalError("smith chain broken");
  return diag;
}

AbelianGroup cokernel(const IntMatrix& a, int cols) {
  for (auto& row : a)
    if ((int)row.size() != cols) throw PreconditionError("ragged matrix");
  std::vector<Int> d = smith_diagonal(a);
  AbelianGroup g;
  g.rank = cols - (int)d.size();
  for (auto& v : d)
    if (v > 1) g.torsion.push_back(v);
  return g;
}

AbelianGroup lcs2_quotient(const LinkingMatrix& lm) {
  int m = lm.m;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) pairs.push_back({a, b});
  IntMatrix rel(m, std::vector<Int>(pairs.size(), Int(0)));
  for (int i = 0; i < m; ++i)
    for (size_t col = 0; col < pairs.size(); ++col) {
      auto [a, b] = pairs[col];
      if (a == i) rel[i][col] = lm.lk(i, b);
      if (b == i) rel[i][col] = -lm.lk(a, i);
    }
  return cokernel(rel, pairs.size());
}

std::string AbelianGroup::str() const {
  if (trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank == 1) {
    out << "Z";
    first = false;
  } else if (rank > 1) {
    out << "Z^" << rank;
    first = false;
  }
  for (auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

}  // namespace concordia
