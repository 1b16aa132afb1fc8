#pragma once

#include <string>
#include <vector>

#include "concordia/pd.hpp"

namespace concordia {

// A knot presented as a 1-string tangle: `closure` is the closed-up knot
// diagram and `strand` is its component cycle rotated so the cut point lies
// on strand[0]; the string enters on that edge, visits the rest in order and
// leaves on the same edge.
struct StringKnot {
  LinkDiagram closure;
  std::vector<int> strand;

  int crossings() const { return closure.num_crossings(); }
  int writhe() const { return closure.writhe(); }
};

// text = PD[...] Components[[...]] Strand[e1,...,ek]
StringKnot parse_string_knot(const std::string& text);
StringKnot parse_string_knot_file(const std::string& path);
// text = Site[3^+, 5^-]; a bare edge means ^+
InfectionSite parse_site(const std::string& text);
// "unknot", "trefoil_rh", "trefoil_lh", "figure8" and '#'-sums of these
StringKnot string_knot_from_name(const std::string& name);

// signed passage count of the site disk against each component
std::vector<Int> site_class(const LinkDiagram& d, const InfectionSite& site);
bool site_null_homologous(const LinkDiagram& d, const InfectionSite& site);

// validate and attach; returns the new site's index in d.sites
int mark_site(LinkDiagram& d, const InfectionSite& site);

// tie the pattern knot into the bundle of site strands: the trivial tangle at
// the disk becomes the r-cable of the pattern string plus writhe-compensating
// full twists, so every copy is 0-framed. The unknot pattern returns the
// diagram unchanged. Output crossing count is
//   crossings(d) + r^2 * crossings(J) + r*(r-1) * |writhe(J)|.
LinkDiagram infect(const LinkDiagram& d, const InfectionSite& site,
                   const StringKnot& pattern);

struct InvarianceReport {
  bool hypothesis_met = false;  // site null-homologous
  bool delta_equal = false;
  bool linking_equal = false;
  bool mu_equal = false;        // all length-2/3 values with distinct indices
  bool ideals_equal = false;    // no mismatch among the ideals computed
  bool ideals_skipped = false;  // some ideals exceeded the minor budget
  bool all_equal = false;
  std::string detail;
};

// recompute the abelian-cover invariants before and after infection and
// compare; comparison still runs when the null-homology hypothesis fails
InvarianceReport verify_homology_invariance(const LinkDiagram& d,
                                            const InfectionSite& site,
                                            const StringKnot& pattern);

}  // namespace concordia
