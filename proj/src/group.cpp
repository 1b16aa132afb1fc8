#include "concordia/group.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace concordia {

void GroupWord::push(int letter) {
  if (letter == 0) throw InternalError("zero letter");
  if (!letters.empty() && letters.back() == -letter)
    letters.pop_back();
  else
    letters.push_back(letter);
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.push(-*it);
  return r;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord r = *this;
  for (int l : o.letters) r.push(l);
  return r;
}

GroupWord GroupWord::pow(int k) const {
  GroupWord base = k >= 0 ? *this : inverse();
  GroupWord r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

std::string GroupWord::str() const {
  if (letters.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out << " ";
    out << "g" << std::abs(letters[i]);
    if (letters[i] < 0) out << "^-1";
  }
  return out.str();
}

WirtingerData wirtinger(const LinkDiagram& d) {
  std::map<int, int> rep;
  std::function<int(int)> find = [&](int e) {
    while (rep[e] != e) e = rep[e] = rep[rep[e]];
    return e;
  };
  for (auto& comp : d.components)
    for (int e : comp) rep[e] = e;
  for (auto& c : d.crossings) {
    int a = find(c.over_in()), b = find(c.over_out());
    if (a != b) rep[a] = b;
  }
  WirtingerData w;
  for (int ci = 0; ci < (int)d.components.size(); ++ci)
    for (int e : d.components[ci]) {
      int r = find(e);
      if (!w.arc_of_edge.count(r)) {
        w.arc_of_edge[r] = ++w.num_arcs;
        w.arc_component.push_back(ci);
      }
      w.arc_of_edge[e] = w.arc_of_edge[r];
    }
  for (auto& c : d.crossings)
    w.relations.push_back({w.arc_of_edge.at(c.under_in()),
                           w.arc_of_edge.at(c.under_out()),
                           w.arc_of_edge.at(c.over_in()), c.sign});
  for (auto& comp : d.components)
    w.base_arc.push_back(w.arc_of_edge.at(comp[0]));
  return w;
}

GroupWord relator_word(const ArcRelation& r) {
  GroupWord g;
  g.push(-r.out_arc);
  g.push(r.sign > 0 ? r.over_arc : -r.over_arc);
  g.push(r.in_arc);
  g.push(r.sign > 0 ? -r.over_arc : r.over_arc);
  return g;
}

GroupWord longitude_word(const LinkDiagram& d, const WirtingerData& w, int comp) {
  GroupWord g;
  auto& edges = d.components[comp];
  for (size_t k = 0; k < edges.size(); ++k) {
    int e = edges[k];
    for (auto& c : d.crossings)
      if (c.under_in() == e) {
        int over = w.arc_of_edge.at(c.over_in());
        g.push(c.sign > 0 ? over : -over);
      }
  }
  int frame = d.self_writhe(comp);
  g = g * GroupWord{{w.base_arc[comp]}}.pow(-frame);
  return g;
}

std::vector<Int> abelianize(const GroupWord& g, const WirtingerData& w) {
  std::vector<Int> sums(*std::max_element(w.arc_component.begin(),
                                          w.arc_component.end()) + 1, Int(0));
  for (int l : g.letters) {
    int a = std::abs(l);
    sums[w.arc_component[a - 1]] += l > 0 ? 1 : -1;
  }
  return sums;
}

}  // namespace concordia
