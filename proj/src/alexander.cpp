#include "concordia/alexander.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace concordia {

LaurentPoly fox_derivative(const GroupWord& w, int gen,
                           const std::vector<int>& gen_class, int nvars) {
  LaurentPoly out = LaurentPoly::constant(nvars, 0);
  std::vector<int> prefix(nvars, 0);  // exponent vector of the running prefix
  for (int letter : w.letters) {
    int g = std::abs(letter);
    int cls = gen_class.at(g - 1);
    if (letter > 0) {
      if (g == gen) out = out + LaurentPoly::monomial(nvars, prefix, 1);
      prefix[cls] += 1;
    } else {
      prefix[cls] -= 1;
      if (g == gen) out = out - LaurentPoly::monomial(nvars, prefix, 1);
    }
  }
  return out;
}

AlexanderMatrixData alexander_matrix(const LinkDiagram& d) {
  WirtingerData w = wirtinger(d);
  AlexanderMatrixData a;
  a.nvars = d.num_components();
  a.col_class = w.arc_component;
  for (auto& rel : w.relations) {
    std::vector<LaurentPoly> row;
    GroupWord r = relator_word(rel);
    for (int g = 1; g <= w.num_arcs; ++g)
      row.push_back(fox_derivative(r, g, w.arc_component, a.nvars));
    a.entries.push_back(row);
  }
  return a;
}

namespace {

LaurentPoly minor_det(const AlexanderMatrixData& a,
                      const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  std::vector<std::vector<LaurentPoly>> sub;
  for (int r : rows) {
    std::vector<LaurentPoly> row;
    for (int c : cols) row.push_back(a.entries[r][c]);
    sub.push_back(row);
  }
  return laurent_det(sub, a.nvars);
}

std::vector<int> cols_without(int n, int skip) {
  std::vector<int> cols;
  for (int c = 0; c < n; ++c)
    if (c != skip) cols.push_back(c);
  return cols;
}

// gcd of all row-selections of maximal square minors of the column-deleted
// matrix; the row-deleted minors are associates for these presentations, so
// large instances verify two of them and fall back to the full gcd on mismatch
LaurentPoly minor_gcd(const AlexanderMatrixData& a, int delete_col) {
  int rows = a.entries.size();
  int n = rows ? (int)a.entries[0].size() : (int)a.col_class.size();
  int s = n - 1;
  if (s == 0) return LaurentPoly::constant(a.nvars, 1);
  if (rows < s) return LaurentPoly::constant(a.nvars, 0);
  std::vector<int> cols = cols_without(n, delete_col);
  if (rows == s) {
    std::vector<int> all(rows);
    for (int i = 0; i < rows; ++i) all[i] = i;
    return minor_det(a, all, cols).normalized();
  }
  // rows == s + 1: one minor per deleted row
  auto rows_without = [&](int skip) {
    std::vector<int> rs;
    for (int r = 0; r < rows; ++r)
      if (r != skip) rs.push_back(r);
    return rs;
  };
  if (rows > 9) {
    LaurentPoly m0 = minor_det(a, rows_without(0), cols);
    LaurentPoly m1 = minor_det(a, rows_without(1), cols);
    LaurentPoly m2 = minor_det(a, rows_without(rows - 1), cols);
    if (assoc_equal(m0, m1) && assoc_equal(m0, m2)) return m0.normalized();
  }
  LaurentPoly g = LaurentPoly::constant(a.nvars, 0);
  for (int skip = 0; skip < rows; ++skip)
    g = laurent_gcd(g, minor_det(a, rows_without(skip), cols));
  return g.normalized();
}

}  // namespace

LaurentPoly alexander_polynomial_col(const LinkDiagram& d, int delete_col) {
  int m = d.num_components();
  AlexanderMatrixData a = alexander_matrix(d);
  int n = a.col_class.size();
  if (n == 0) throw InternalError("no generators");
  if ((int)a.entries.size() < n - 1)
    return LaurentPoly::constant(m, 0);  // split pieces force a zero order
  LaurentPoly g = minor_gcd(a, delete_col);
  if (m >= 2 && !(g == LaurentPoly::constant(m, 0))) {
    LaurentPoly strip = LaurentPoly::variable(m, a.col_class[delete_col]) -
                        LaurentPoly::constant(m, 1);
    auto q = g.divide_exact(strip);
    if (!q)
      throw InternalError("minor gcd missed its forced linear factor");
    g = *q;
  }
  return g.normalized();
}

LaurentPoly alexander_polynomial(const LinkDiagram& d) {
  return alexander_polynomial_col(d, 0);
}

std::vector<LaurentPoly> elementary_ideal(const LinkDiagram& d, int k) {
  if (k < 0) throw PreconditionError("ideal index must be >= 0");
  AlexanderMatrixData a = alexander_matrix(d);
  int rows = a.entries.size();
  int n = a.col_class.size();
  int s = n - 1 - k;
  if (s <= 0) return {LaurentPoly::constant(a.nvars, 1)};
  if (s > rows || s > n - 1) return {};
  std::vector<int> cols = cols_without(n, 0);

  auto subsets = [](int total, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == size) {
        out.push_back(cur);
        return;
      }
      for (int v = start; v <= total - (size - depth); ++v) {
        cur[depth] = v;
        rec(v + 1, depth + 1);
      }
    };
    rec(0, 0);
    return out;
  };
  auto rsel = subsets(rows, s);
  auto csel = subsets(n - 1, s);
  if ((long long)rsel.size() * csel.size() > 20000)
    throw PreconditionError("elementary ideal enumeration exceeds budget");
  std::set<std::string> seen;
  std::vector<LaurentPoly> gens;
  for (auto& rs : rsel)
    for (auto& cs : csel) {
      std::vector<int> cc;
      for (int c : cs) cc.push_back(cols[c]);
      LaurentPoly p = minor_det(a, rs, cc).normalized();
      if (p == LaurentPoly::constant(a.nvars, 0)) continue;
      if (seen.insert(p.str()).second) gens.push_back(p);
    }
  return gens;
}

LaurentPoly ideal_gcd_summary(const std::vector<LaurentPoly>& gens, int nvars) {
  LaurentPoly g = LaurentPoly::constant(nvars, 0);
  for (auto& p : gens) g = laurent_gcd(g, p);
  return g.normalized();
}

TorresReport torres_check(const LinkDiagram& d) {
  if (d.num_components() != 2)
    throw PreconditionError("specialization check needs exactly 2 components");
  TorresReport rep;
  rep.lk = linking_matrix(d).lk(0, 1);
  LaurentPoly big = alexander_polynomial(d);
  rep.lhs = big.specialize_one(1).normalized();  // x2 -> 1
  LinkDiagram k1 = select_components(d, {0});
  LaurentPoly dk = alexander_polynomial(k1);
  Int l = rep.lk < 0 ? -rep.lk : rep.lk;
  if (l == 0) {
    rep.degenerate_lk0 = true;
    rep.rhs = LaurentPoly::constant(1, 0);
    rep.ok = rep.lhs == rep.rhs;
    rep.ones_match = big.eval_all_ones() == 0;
    return rep;
  }
  LaurentPoly cyc = LaurentPoly::constant(1, 0);
  for (Int t = 0; t < l; ++t) {
    std::vector<int> e{(int)t};
    cyc = cyc + LaurentPoly::monomial(1, e, 1);
  }
  rep.rhs = (cyc * dk).normalized();
  rep.ok = assoc_equal(rep.lhs, rep.rhs);
  Int ones = big.eval_all_ones();
  rep.ones_match = (ones < 0 ? -ones : ones) == l;
  rep.ok = rep.ok && rep.ones_match;
  return rep;
}

BlanchfieldStatus blanchfield_criterion(const LinkDiagram& d) {
  if (d.num_components() != 2)
    throw PreconditionError("criterion needs exactly 2 components");
  if (linking_matrix(d).lk(0, 1) == 0) return BlanchfieldStatus::Inconclusive;
  LaurentPoly delta = alexander_polynomial(d);
  if (delta.is_unit()) return BlanchfieldStatus::Inconclusive;
  return BlanchfieldStatus::NotConstantlyZero;
}

}  // namespace concordia
