#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "concordia/rational.hpp"

namespace concordia {

// Univariate integer polynomial, coefficients ascending. No trailing zeros;
// the zero polynomial has an empty coefficient vector.
struct IntPoly {
  std::vector<Int> c;

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly from(std::vector<Int> coeffs);

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  Int at(int k) const;
  Int lead() const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c == o.c; }

  IntPoly derivative() const;
  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;
  // Quotient when the division is exact over Z, nullopt otherwise.
  std::optional<IntPoly> divide_exact(const IntPoly& d) const;
  Int content() const;
  IntPoly primitive_part() const;

  std::string str(const std::string& var = "x") const;
};

// Rational univariate polynomial, same layout. Used for euclidean work
// (Sturm chains, modular inverses) where coefficient growth over Z hurts.
struct RatPoly {
  std::vector<Rat> c;

  static RatPoly from(std::vector<Rat> coeffs);
  static RatPoly from_int(const IntPoly& p);

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  Rat lead() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scale(const Rat& s) const;

  Rat eval(const Rat& x) const;
  // division with remainder: *this = q*d + r, deg r < deg d
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
};

int euler_phi(int n);
// n-th cyclotomic polynomial, n >= 1.
IntPoly cyclotomic(int n);

IntPoly squarefree_part(const IntPoly& p);

// Distinct real roots of p in the open interval (lo, hi), as disjoint
// rational intervals [a,b] sorted ascending with p(a), p(b) != 0 and exactly
// one root strictly inside each. Endpoints lo, hi must not be roots.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p, const Rat& lo, const Rat& hi);

// Bisect an isolating interval for the (squarefree) polynomial until its
// width is at most `width`.
void refine_root(const IntPoly& squarefree, std::pair<Rat, Rat>& iv, const Rat& width);

// For p palindromic of formal degree 2g (c[k] == c[2g-k] with zero padding
// allowed at the top), returns P of degree <= g with p(x) = x^g * P(x + 1/x).
// Throws InternalError if p is not palindromic in that sense.
IntPoly palindromic_to_chebyshev(const IntPoly& p, int g);

} // namespace concordia
