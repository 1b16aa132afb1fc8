#pragma once

#include <string>

#include "concordia/alexander.hpp"
#include "concordia/family.hpp"
#include "concordia/magnus.hpp"
#include "concordia/satellite.hpp"
#include "concordia/signature.hpp"

namespace concordia {

// Shared JSON shapes. Exact rationals become {"num","den"} decimal strings,
// unbounded integers become decimal strings, provably small quantities
// (counts, linking numbers, signatures) stay JSON numbers.
Json json_rational(const Rat& q);
Json json_linking(const LinkingMatrix& lm);
Json json_group(const AbelianGroup& g);

// abelian-cover invariants of a diagram: linking matrix, Alexander
// polynomial, Milnor values up to length 3, Torres and Blanchfield checks
Json invariants_report(const LinkDiagram& d);

Json classify_report(const LinkDiagram& d);

Json signature_report(const SeifertMatrix& v, SigConvention conv);

Json invariance_report(const InvarianceReport& rep);

// the profile is computed in the raw (classical) sign; flip it on request
SignatureProfile profile_with_convention(SignatureProfile prof, SigConvention conv);

// One row per arc of the full circle with jump rows interleaved. Angles are
// exact fractions of 2*pi when known, 9-digit decimals otherwise.
std::string profile_csv(const SignatureProfile& prof);

// standalone SVG step plot of the signature over the full circle
std::string profile_svg(const SignatureProfile& prof, const std::string& label);

}  // namespace concordia
