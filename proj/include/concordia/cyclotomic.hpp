#pragma once

#include <memory>
#include <string>
#include <vector>

#include "concordia/poly.hpp"
#include "concordia/rational.hpp"

namespace concordia {

// Element of Q(zeta_b), stored as a rational polynomial in zeta of degree
// < phi(b), reduced modulo the b-th cyclotomic polynomial.
class CycloNum {
 public:
  // zero element of Q(zeta_b)
  explicit CycloNum(int b);
  static CycloNum rational(int b, const Rat& q);
  // zeta_b^k
  static CycloNum root_power(int b, long long k);

  int order() const { return b_; }
  bool is_zero() const;
  bool operator==(const CycloNum& o) const;

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator-() const;
  CycloNum inverse() const;
  // complex conjugate: zeta -> zeta^{-1}
  CycloNum conj() const;

  bool is_real() const { return *this == conj(); }
  // sign of a real element, decided exactly (algebraic zero test, then a
  // certified numeric enclosure). Throws InternalError on non-real input.
  int real_sign() const;

  const std::vector<Rat>& coeffs() const { return c_; }
  std::string str() const;

 private:
  int b_;
  std::vector<Rat> c_;

  void reduce_from(std::vector<Rat> raw);
};

} // namespace concordia
