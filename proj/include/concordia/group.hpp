#pragma once

#include <map>
#include <string>
#include <vector>

#include "concordia/pd.hpp"

namespace concordia {

// freely reduced word in 1-based generators; letter -g is the inverse of g
struct GroupWord {
  std::vector<int> letters;

  void push(int letter);  // with free cancellation
  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& o) const;
  GroupWord pow(int k) const;
  bool empty() const { return letters.empty(); }
  std::string str() const;  // e.g. "g1 g3^-1 g2"
};

// arc-meridian relation at one crossing: out = over^sign in over^-sign
struct ArcRelation {
  int in_arc = 0, out_arc = 0, over_arc = 0;
  int sign = 0;
};

struct WirtingerData {
  int num_arcs = 0;
  std::vector<int> arc_component;      // arc_component[a-1] = component of arc a
  std::map<int, int> arc_of_edge;
  std::vector<ArcRelation> relations;  // one per crossing, diagram order
  std::vector<int> base_arc;           // per component: arc carrying its first edge
};

WirtingerData wirtinger(const LinkDiagram& d);

// out^-1 over^sign in over^-sign as a word
GroupWord relator_word(const ArcRelation& r);

// zero-framed longitude of the component, as a word in arc generators
GroupWord longitude_word(const LinkDiagram& d, const WirtingerData& w, int comp);

// exponent sums per component class
std::vector<Int> abelianize(const GroupWord& g, const WirtingerData& w);

}  // namespace concordia
