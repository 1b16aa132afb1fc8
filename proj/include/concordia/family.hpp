#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "concordia/laurent.hpp"
#include "concordia/pd.hpp"
#include "concordia/rational.hpp"
#include "concordia/seifert.hpp"
#include "concordia/signature.hpp"
#include "concordia/snf.hpp"

namespace concordia {

using Json = nlohmann::ordered_json;

// Which construction route applies to a given base link.
//   FreedmanKnot:    Alexander polynomial 1 knot, topologically slice
//   DavisException:  2 components, Alexander polynomial 1; every such link
//                    with linking number 1 is concordant to the Hopf link
//   NilpotentRoute:  the second lower-central quotient of the link group is
//                    nontrivial; finite-cyclic covers separate the family
//   BlanchfieldRoute: that quotient is trivial (or the link is a knot with
//                    nontrivial polynomial); infinite-cyclic covers and the
//                    Blanchfield form do the separating
enum class Regime { FreedmanKnot, DavisException, NilpotentRoute, BlanchfieldRoute };

std::string regime_name(Regime r);

struct RegimeVerdict {
  Regime regime = Regime::FreedmanKnot;
  int m = 0;
  LinkingMatrix lk;
  AbelianGroup quotient;    // second lower-central quotient
  LaurentPoly delta;        // normalized Alexander polynomial
  bool delta_trivial = false;
  std::string reason;       // one-line trace of the deciding criteria
};

RegimeVerdict classify(const LinkDiagram& d);

// Prime along which to build the finite-cyclic family: smallest prime factor
// of the first invariant factor of the quotient, or 2 when the quotient is
// free of positive rank. Throws PreconditionError on a trivial quotient.
int choose_prime(const AbelianGroup& q);
int choose_prime(const LinkDiagram& d);

struct FamilyConfig {
  Rat R;            // separation radius, must be > 0
  int p = 3;        // prime for the finite-cyclic route
  int count = 1;    // number of family members
  int n_sites = 1;  // infection sites per member (infinite-cyclic route)
  SeifertMatrix pattern;  // infection pattern; default right trefoil
  bool has_pattern = false;
};

struct FamilyMember {
  int i = 0;               // 1-based member index
  Int k;                   // pattern copies tied in at one site
  Rat rho;                 // per-site rho contribution, k * c_value, exact
  bool base_separation = false;  // |rho| > R
};

// One recorded inequality |rho_i| > R + n_sites * |rho_j|, i > j.
struct PairCheck {
  int i = 0, j = 0;
  Rat lhs, rhs;
  bool strict = false;
};

struct FamilyCertificate {
  std::string route;  // "nilpotent" or "blanchfield"
  Rat R;
  int p = 0;          // 0 on the blanchfield route
  int n_sites = 1;
  Rat c_value;        // signed rho contribution of a single pattern copy
  bool adjusted = false;  // block size bumped past a boundary equality
  std::vector<FamilyMember> members;
  std::vector<PairCheck> pairs;
  bool all_strict = false;
};

// Members k_i = i * kb with kb the smallest block making kb * |C| > R where
// C = rho of the pattern over Z_p. Consecutive members then differ by more
// than R, which gives every pairwise and base inequality at once.
FamilyCertificate build_family_nilpotent(const FamilyConfig& cfg);

// Members grow by the recursion k_i = smallest integer with
// k_i * |T| > R + n_sites * k_{i-1} * |T|, T = rho integral of the pattern.
FamilyCertificate build_family_blanchfield(const FamilyConfig& cfg);

// Re-derive every stored inequality and flag from the exact member values.
bool verify_certificate(const FamilyCertificate& cert);

Json certificate_to_json(const FamilyCertificate& cert);
FamilyCertificate certificate_from_json(const Json& j);

// One row of the distinguishing ledger for an ordered pair i >= j of members
// under a choice eps of which sites were actually used: the obstruction lies
// in [-R + A, R + A] with A = sum(eps_i) * rho_i - sum(eps_j) * rho_j.
struct PairLedgerRow {
  int i = 0, j = 0;
  Rat shift;   // A
  Rat lo, hi;
  bool zero_excluded = false;
  bool hypothesis_ok = false;  // member i uses at least one site
};

struct RhoLedger {
  std::vector<PairLedgerRow> rows;  // all pairs i >= j, diagonal included
  bool all_distinguished = false;   // every i > j row excludes zero legally
};

// eps[member-1][site] in {0,1}; dimensions must match the certificate.
RhoLedger rho_bookkeeping(const FamilyCertificate& cert,
                          const std::vector<std::vector<int>>& eps);

Json ledger_to_json(const RhoLedger& led);

}  // namespace concordia
