#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "concordia/rational.hpp"

namespace concordia {

// Multivariable Laurent polynomial over Z in variables x1..xm.
// Terms are kept in a map keyed by exponent vector (lex order), which makes
// iteration order, printing and the normal form deterministic.
class LaurentPoly {
 public:
  using Exps = std::vector<int>;

  LaurentPoly() : nvars_(0) {}
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, Int c);
  static LaurentPoly monomial(int nvars, const Exps& e, Int c = Int(1));
  // x_k as a Laurent polynomial (k is 0-based)
  static LaurentPoly variable(int nvars, int k);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exps, Int>& terms() const { return terms_; }

  void add_term(const Exps& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  LaurentPoly mul_scalar(const Int& c) const;
  LaurentPoly mul_monomial(const Exps& e, const Int& c = Int(1)) const;

  // substitute x_k := 1, dropping the variable (result has nvars-1 variables)
  LaurentPoly specialize_one(int k) const;
  Int eval_all_ones() const;
  // substitute x_k := -1 for every variable sequentially is not needed;
  // single-variable evaluation at an integer point (Laurent: needs unit +-1)
  Int eval_at_pm_one(const std::vector<int>& signs) const;

  int min_exp(int k) const;
  int max_exp(int k) const;

  // canonical representative of the unit class: min exponent 0 in each
  // variable and lexicographically-first coefficient positive
  LaurentPoly normalized() const;
  bool is_unit() const;         // +- monomial
  bool is_one_normalized() const;  // normalized() == 1

  // exact division; nullopt if not divisible
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  Int content() const;

  std::string str() const;  // e.g. "3*x1^2*x2^-1 + x2 - 1"
  static LaurentPoly parse(const std::string& text, int nvars);

 private:
  int nvars_;
  std::map<Exps, Int> terms_;
};

inline bool assoc_equal(const LaurentPoly& a, const LaurentPoly& b) {
  return a.normalized() == b.normalized();
}

// gcd up to units, content/primitive-part recursion on the number of
// variables; result is normalized
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// determinant of a square matrix of Laurent polynomials (fraction-free
// Bareiss with Markowitz-style sparse pivoting)
LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m, int nvars);

}  // namespace concordia
