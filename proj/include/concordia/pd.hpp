#pragma once

#include <string>
#include <vector>

#include "concordia/rational.hpp"

namespace concordia {

// One crossing X[a,b,c,d]: slots counterclockwise starting at the incoming
// under-strand, so a -> c is the under-strand and {b,d} carry the over-strand.
// Which of b/d is the incoming over-edge is recovered from the component
// orientations at parse time; over_in_slot is 1 for b, 3 for d.
struct Crossing {
  int slot[4];
  int over_in_slot = -1;  // 1 or 3 once resolved
  int sign = 0;           // +1 / -1 once resolved

  int under_in() const { return slot[0]; }
  int under_out() const { return slot[2]; }
  int over_in() const { return slot[over_in_slot]; }
  int over_out() const { return slot[over_in_slot == 1 ? 3 : 1]; }
};

// An infection site: the boundary circle of a disk the listed strands pass
// through, in transversal order. Sign +1 means the strand agrees with the
// disk's reference normal. inside_crossings is the declared list of crossings
// enclosed by the circle (must be empty for a usable site).
struct InfectionSite {
  std::vector<std::pair<int, int>> strands;  // (edge, +-1)
  std::vector<int> inside_crossings;
};

struct LinkingMatrix {
  int m = 0;
  std::vector<std::vector<Int>> l;
  Int lk(int i, int j) const { return l.at(i).at(j); }
};

class LinkDiagram {
 public:
  std::vector<Crossing> crossings;
  // components[i] = edge labels in orientation order; a crossing-free
  // component is a single edge appearing in no crossing
  std::vector<std::vector<int>> components;
  std::vector<InfectionSite> sites;

  int num_components() const { return (int)components.size(); }
  int num_crossings() const { return (int)crossings.size(); }

  int component_of_edge(int edge) const;
  // next edge after `edge` along its component (cyclic)
  int next_edge(int edge) const;

  int writhe() const;
  int self_writhe(int comp) const;

  // run all structural checks + orientation resolution; throws ParseError
  void validate_and_resolve();

  std::string serialize() const;  // canonical form
};

LinkDiagram parse_pd(const std::string& text);
LinkDiagram parse_pd_file(const std::string& path);

LinkingMatrix linking_matrix(const LinkDiagram& d);

// sub-diagram spanned by the given components (0-based, ascending);
// edges merged across deleted crossings, labels renumbered
LinkDiagram select_components(const LinkDiagram& d, const std::vector<int>& keep);

// test-support local moves
LinkDiagram reidemeister1(const LinkDiagram& d, int edge, int kink_sign);
LinkDiagram reidemeister2(const LinkDiagram& d, int over_edge, int under_edge);

}  // namespace concordia
