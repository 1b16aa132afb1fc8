#pragma once

#include <utility>
#include <vector>

#include "concordia/rational.hpp"

namespace concordia {

// Certified numeric facts about the real embedding of cyclotomic data.
// All results are rigorous: enclosures are computed with directed rounding
// and returned as exact rational bounds.

// Sign of sum_k c[k] * cos(2*pi*k / b). The caller must have excluded the
// exact-zero case algebraically; this refines precision until the enclosure
// excludes zero.
int sign_of_cos_combination(const std::vector<Rat>& c, int b);

// Rational enclosure [lo, hi] of 2*cos(2*pi*a / b) with hi - lo <= eps.
std::pair<Rat, Rat> cos2_enclosure(int a, int b, const Rat& eps);

// Rational enclosure of acos(y/2) / pi for rational y in (-2, 2), width <= eps.
// This is the angle of the unit-circle point with real part y/2, as a
// fraction of pi in (0, 1).
std::pair<Rat, Rat> acos_fraction_enclosure(const Rat& y, const Rat& eps);

} // namespace concordia
