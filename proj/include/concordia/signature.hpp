#pragma once

#include <vector>

#include "concordia/rational.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

// Sign convention for the rho invariants. The raw Hermitian form gives the
// right-handed trefoil negative signatures ("classical"); the "rho"
// convention flips the sign, so the profile integral is the rho invariant
// and trefoil rho values come out positive.
enum class SigConvention { Rho, Classical };

struct ProfileJump {
  bool rational_angle = false;
  int n = 0;  // theta = 2*pi*k/n when rational_angle
  int k = 0;
  Rat y_lo, y_hi;  // certified enclosure of y = 2*cos(theta)
  bool has_sigma_at = false;
  int sigma_at = 0;  // signature exactly at the jump (rational angles only)
};

// Levine-Tristram signature on the upper half circle theta in (0, pi):
// piecewise constant with jumps only at unit-circle roots of det(V - xV^T).
// plateaus[i] is the value on the i-th open arc; the lower half circle is
// the mirror image.
struct SignatureProfile {
  int size = 0;
  std::vector<ProfileJump> jumps;  // ascending theta
  std::vector<int> plateaus;       // jumps.size() + 1 entries
};

struct RhoValue {
  bool exact = true;
  Rat value;  // exact value, or the midpoint of a certified enclosure
  Rat width;  // 0 when exact, else enclosure width (kept below 1e-9)
};

// Signature of (1-w)V + (1-conj(w))V^T at w = e^{2*pi*i*a/b}, computed in
// exact cyclotomic arithmetic. w = 1 (b | a) is rejected.
int lt_signature(const SeifertMatrix& v, int a, int b);

SignatureProfile signature_profile(const SeifertMatrix& v);

// (1/p) * sum of signatures over the p-th roots of unity (the w = 1 term
// contributes zero).
RhoValue rho_zp(const SeifertMatrix& v, int p, SigConvention conv = SigConvention::Rho);

// Integral of the signature function over the unit circle, normalized to
// total measure one. Exact when every jump sits at a rational multiple of
// pi; otherwise a certified enclosure of width < 1e-9.
RhoValue rho_integral(const SeifertMatrix& v, SigConvention conv = SigConvention::Rho);

} // namespace concordia
