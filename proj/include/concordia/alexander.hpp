#pragma once

#include <vector>

#include "concordia/group.hpp"
#include "concordia/laurent.hpp"
#include "concordia/pd.hpp"

namespace concordia {

// d(word)/d(gen), abelianized into Z[x1^±1..xn^±1] via gen_class
// (gen_class[g-1] = 0-based variable index of generator g)
LaurentPoly fox_derivative(const GroupWord& w, int gen,
                           const std::vector<int>& gen_class, int nvars);

struct AlexanderMatrixData {
  int nvars = 0;
  std::vector<std::vector<LaurentPoly>> entries;  // rows follow the relations
  std::vector<int> col_class;                     // variable class per column
};

AlexanderMatrixData alexander_matrix(const LinkDiagram& d);

// gcd of the maximal minors after deleting one generator column, with the
// standard (x-1) factor stripped in the multi-component case; normalized
LaurentPoly alexander_polynomial(const LinkDiagram& d);
LaurentPoly alexander_polynomial_col(const LinkDiagram& d, int delete_col);

// generator list of the k-th elementary ideal of the column-deleted matrix:
// all (n-k-1)-size minors, normalized and deduplicated
std::vector<LaurentPoly> elementary_ideal(const LinkDiagram& d, int k);

// single-polynomial summary used for before/after comparisons
LaurentPoly ideal_gcd_summary(const std::vector<LaurentPoly>& gens, int nvars);

struct TorresReport {
  bool ok = false;
  bool degenerate_lk0 = false;
  Int lk = 0;
  LaurentPoly lhs, rhs;  // both sides of the specialization identity
  bool ones_match = false;  // |eval at (1,1)| == |lk|
};

TorresReport torres_check(const LinkDiagram& d);

enum class BlanchfieldStatus { NotConstantlyZero, Inconclusive };

BlanchfieldStatus blanchfield_criterion(const LinkDiagram& d);

}  // namespace concordia
