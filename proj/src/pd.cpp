#include "concordia/pd.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace concordia {

namespace {

struct Tok {
  const std::string& s;
  size_t i = 0;
  explicit Tok(const std::string& text) : s(text) {}
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c)
      throw ParseError(std::string("expected '") + c + "' at offset " +
                       std::to_string(i));
    ++i;
  }
  bool accept(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip();
    size_t j = i;
    while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_'))
      ++j;
    std::string w = s.substr(i, j - i);
    i = j;
    return w;
  }
  int integer() {
    skip();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
    if (k == j) throw ParseError("expected integer at offset " + std::to_string(i));
    int v = std::stoi(s.substr(i, k - i));
    i = k;
    return v;
  }
};

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  Tok t(text);
  LinkDiagram d;
  if (t.ident() != "PD") throw ParseError("diagram must start with PD[...]");
  t.expect('[');
  if (!t.accept(']')) {
    while (true) {
      if (t.ident() != "X") throw ParseError("expected X[...] crossing");
      t.expect('[');
      Crossing c{};
      for (int k = 0; k < 4; ++k) {
        c.slot[k] = t.integer();
        if (k < 3) t.expect(',');
      }
      t.expect(']');
      d.crossings.push_back(c);
      if (t.accept(']')) break;
      t.expect(',');
    }
  }
  if (t.ident() != "Components") throw ParseError("expected Components[...]");
  t.expect('[');
  while (true) {
    t.expect('[');
    std::vector<int> comp;
    while (true) {
      comp.push_back(t.integer());
      if (t.accept(']')) break;
      t.expect(',');
    }
    d.components.push_back(comp);
    if (t.accept(']')) break;
    t.expect(',');
  }
  while (!t.eof()) {
    std::string w = t.ident();
    if (w == "Site") {
      t.expect('[');
      InfectionSite site;
      while (true) {
        int e = t.integer();
        t.expect('^');
        int sg;
        char c = t.peek();
        if (c == '+')
          sg = 1;
        else if (c == '-')
          sg = -1;
        else
          throw ParseError("expected + or - after ^ in Site");
        ++t.i;
        site.strands.push_back({e, sg});
        if (t.accept(']')) break;
        t.expect(',');
      }
      d.sites.push_back(site);
    } else if (w == "Inside") {
      if (d.sites.empty()) throw ParseError("Inside[...] with no preceding Site");
      t.expect('[');
      if (!t.accept(']')) {
        while (true) {
          d.sites.back().inside_crossings.push_back(t.integer());
          if (t.accept(']')) break;
          t.expect(',');
        }
      }
    } else {
      throw ParseError("unexpected token '" + w + "'");
    }
  }
  d.validate_and_resolve();
  return d;
}

LinkDiagram parse_pd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pd(ss.str());
}

int LinkDiagram::component_of_edge(int edge) const {
  for (int i = 0; i < (int)components.size(); ++i)
    for (int e : components[i])
      if (e == edge) return i;
  throw PreconditionError("edge " + std::to_string(edge) + " not in any component");
}

int LinkDiagram::next_edge(int edge) const {
  for (auto& comp : components)
    for (size_t k = 0; k < comp.size(); ++k)
      if (comp[k] == edge) return comp[(k + 1) % comp.size()];
  throw PreconditionError("edge " + std::to_string(edge) + " not in any component");
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (auto& c : crossings) w += c.sign;
  return w;
}

int LinkDiagram::self_writhe(int comp) const {
  int w = 0;
  for (auto& c : crossings)
    if (component_of_edge(c.under_in()) == comp &&
        component_of_edge(c.over_in()) == comp)
      w += c.sign;
  return w;
}

void LinkDiagram::validate_and_resolve() {
  // edge bookkeeping
  std::map<int, int> comp_of;
  for (int i = 0; i < (int)components.size(); ++i) {
    if (components[i].empty()) throw ParseError("empty component");
    for (int e : components[i]) {
      if (comp_of.count(e)) throw ParseError("edge " + std::to_string(e) +
                                             " listed in two components");
      comp_of[e] = i;
    }
  }
  std::map<int, std::vector<std::pair<int, int>>> occ;  // edge -> (crossing, slot)
  for (int ci = 0; ci < (int)crossings.size(); ++ci)
    for (int s = 0; s < 4; ++s) {
      int e = crossings[ci].slot[s];
      if (!comp_of.count(e))
        throw ParseError("edge " + std::to_string(e) + " not in Components");
      occ[e].push_back({ci, s});
    }
  for (auto& [e, v] : occ)
    if (v.size() != 2)
      throw ParseError("edge " + std::to_string(e) + " appears " +
                       std::to_string(v.size()) + " times (want 2)");
  for (auto& [e, c] : comp_of)
    if (!occ.count(e) && components[c].size() != 1)
      throw ParseError("edge " + std::to_string(e) +
                       " appears in no crossing but its component has " +
                       std::to_string(components[c].size()) + " edges");

  // role resolution: role 1 = edge ends at that occurrence, 0 = starts, -1 unknown
  auto role_key = [](int ci, int s) { return ci * 4 + s; };
  std::map<int, int> role;
  for (int ci = 0; ci < (int)crossings.size(); ++ci) {
    role[role_key(ci, 0)] = 1;
    role[role_key(ci, 2)] = 0;
    role[role_key(ci, 1)] = -1;
    role[role_key(ci, 3)] = -1;
  }
  auto other_over_slot = [](int s) { return s == 1 ? 3 : 1; };

  bool changed = true;
  auto set_role = [&](int ci, int s, int r) {
    int k = role_key(ci, s);
    if (role[k] == -1) {
      role[k] = r;
      changed = true;
    } else if (role[k] != r) {
      throw ParseError("inconsistent orientations at crossing " +
                       std::to_string(ci));
    }
  };

  // succ-based forcing: over_in must satisfy next(over_in) == over_out
  for (int ci = 0; ci < (int)crossings.size(); ++ci) {
    int b = crossings[ci].slot[1], dd = crossings[ci].slot[3];
    bool b_in_ok = next_edge(b) == dd;   // over runs b -> d
    bool d_in_ok = next_edge(dd) == b;   // over runs d -> b
    if (!b_in_ok && !d_in_ok)
      throw ParseError("over-strand at crossing " + std::to_string(ci) +
                       " does not follow component order");
    if (b_in_ok && !d_in_ok) {
      set_role(ci, 1, 1);
      set_role(ci, 3, 0);
    } else if (d_in_ok && !b_in_ok) {
      set_role(ci, 3, 1);
      set_role(ci, 1, 0);
    }
  }

  while (true) {
    while (changed) {
      changed = false;
      // pair constraint inside each crossing
      for (int ci = 0; ci < (int)crossings.size(); ++ci) {
        int r1 = role[role_key(ci, 1)], r3 = role[role_key(ci, 3)];
        if (r1 != -1 && r3 == -1) set_role(ci, 3, 1 - r1);
        if (r3 != -1 && r1 == -1) set_role(ci, 1, 1 - r3);
        if (r1 != -1 && r3 != -1 && r1 == r3)
          throw ParseError("over-strand enters twice at crossing " +
                           std::to_string(ci));
      }
      // per-edge constraint: one end, one start
      for (auto& [e, v] : occ) {
        int ra = role[role_key(v[0].first, v[0].second)];
        int rb = role[role_key(v[1].first, v[1].second)];
        if (ra != -1 && rb == -1) set_role(v[1].first, v[1].second, 1 - ra);
        if (rb != -1 && ra == -1) set_role(v[0].first, v[0].second, 1 - rb);
        if (ra != -1 && rb != -1 && ra == rb)
          throw ParseError("edge " + std::to_string(e) +
                           " has inconsistent direction");
      }
    }
    // tie-break any leftover ambiguity deterministically: over enters at d
    int amb = -1;
    for (int ci = 0; ci < (int)crossings.size() && amb < 0; ++ci)
      if (role[role_key(ci, 1)] == -1) amb = ci;
    if (amb < 0) break;
    set_role(amb, 3, 1);
  }

  for (int ci = 0; ci < (int)crossings.size(); ++ci) {
    Crossing& c = crossings[ci];
    c.over_in_slot = role[role_key(ci, 3)] == 1 ? 3 : 1;
    c.sign = c.over_in_slot == 3 ? 1 : -1;
    if (next_edge(c.under_in()) != c.under_out())
      throw ParseError("under-strand at crossing " + std::to_string(ci) +
                       " does not follow component order");
    if (next_edge(c.over_in()) != c.over_out())
      throw ParseError("over-strand at crossing " + std::to_string(ci) +
                       " does not follow component order");
  }

  // each component transition must be realized by exactly one crossing passage
  std::map<std::pair<int, int>, int> transitions;
  for (int ci = 0; ci < (int)crossings.size(); ++ci) {
    transitions[{crossings[ci].under_in(), crossings[ci].under_out()}]++;
    transitions[{crossings[ci].over_in(), crossings[ci].over_out()}]++;
  }
  for (auto& comp : components) {
    if (comp.size() == 1 && !occ.count(comp[0])) continue;
    for (size_t k = 0; k < comp.size(); ++k) {
      auto key = std::make_pair(comp[k], comp[(k + 1) % comp.size()]);
      if (transitions[key] < 1)
        throw ParseError("transition " + std::to_string(key.first) + "->" +
                         std::to_string(key.second) +
                         " not realized by any crossing");
    }
  }

  for (auto& site : sites) {
    if (site.strands.empty()) throw ParseError("empty Site[...]");
    for (auto& [e, s] : site.strands) {
      if (!comp_of.count(e))
        throw ParseError("Site references unknown edge " + std::to_string(e));
      if (s != 1 && s != -1) throw ParseError("Site sign must be +-1");
    }
  }
}

std::string LinkDiagram::serialize() const {
  std::vector<std::array<int, 4>> xs;
  for (auto& c : crossings)
    xs.push_back({c.slot[0], c.slot[1], c.slot[2], c.slot[3]});
  std::sort(xs.begin(), xs.end());
  std::vector<std::vector<int>> comps = components;
  for (auto& c : comps) {
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
  }
  std::sort(comps.begin(), comps.end(),
            [](auto& a, auto& b) { return a[0] < b[0]; });
  std::ostringstream out;
  out << "PD[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ", ";
    out << "X[" << xs[i][0] << "," << xs[i][1] << "," << xs[i][2] << ","
        << xs[i][3] << "]";
  }
  out << "]\nComponents[";
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) out << ",";
    out << "[";
    for (size_t k = 0; k < comps[i].size(); ++k) {
      if (k) out << ",";
      out << comps[i][k];
    }
    out << "]";
  }
  out << "]\n";
  for (auto& site : sites) {
    out << "Site[";
    for (size_t k = 0; k < site.strands.size(); ++k) {
      if (k) out << ", ";
      out << site.strands[k].first << "^"
          << (site.strands[k].second > 0 ? "+" : "-");
    }
    out << "]\n";
    if (!site.inside_crossings.empty()) {
      out << "Inside[";
      for (size_t k = 0; k < site.inside_crossings.size(); ++k) {
        if (k) out << ",";
        out << site.inside_crossings[k];
      }
      out << "]\n";
    }
  }
  return out.str();
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  LinkingMatrix lm;
  lm.m = d.num_components();
  lm.l.assign(lm.m, std::vector<Int>(lm.m, Int(0)));
  std::vector<std::vector<int>> cnt(lm.m, std::vector<int>(lm.m, 0));
  for (auto& c : d.crossings) {
    int iu = d.component_of_edge(c.under_in());
    int io = d.component_of_edge(c.over_in());
    if (iu == io) continue;
    lm.l[iu][io] += c.sign;
    lm.l[io][iu] += c.sign;
    cnt[iu][io] ^= 1;
    cnt[io][iu] ^= 1;
  }
  for (int i = 0; i < lm.m; ++i)
    for (int j = 0; j < lm.m; ++j) {
      if (cnt[i][j])
        throw PreconditionError("odd number of mixed crossings between "
                                "components " + std::to_string(i + 1) + "," +
                                std::to_string(j + 1));
      lm.l[i][j] /= 2;
    }
  return lm;
}

LinkDiagram select_components(const LinkDiagram& d, const std::vector<int>& keep) {
  std::set<int> keepset(keep.begin(), keep.end());
  for (int k : keep)
    if (k < 0 || k >= d.num_components())
      throw PreconditionError("component index out of range");
  auto comp_of = [&](int e) { return d.component_of_edge(e); };
  auto kept_crossing = [&](const Crossing& c) {
    return keepset.count(comp_of(c.under_in())) &&
           keepset.count(comp_of(c.over_in()));
  };
  // merge consecutive edges whose shared transition crossing is dropped
  std::map<int, int> merge_next;  // edge -> representative successor chain
  std::map<int, int> rep;
  std::function<int(int)> find = [&](int e) {
    while (rep.count(e) && rep[e] != e) e = rep[e];
    return e;
  };
  for (int ci : keep) {
    auto& comp = d.components[ci];
    for (int e : comp) rep[e] = e;
  }
  for (auto& c : d.crossings) {
    if (kept_crossing(c)) continue;
    // passages of kept components through a dropped crossing merge edges
    auto merge_pass = [&](int ein, int eout) {
      if (!keepset.count(comp_of(ein))) return;
      int a = find(ein), b = find(eout);
      if (a != b) rep[b] = a;  // direction-aware union is not needed: chain below
    };
    merge_pass(c.under_in(), c.under_out());
    merge_pass(c.over_in(), c.over_out());
  }
  // rebuild per-component merged edge cycles in order
  LinkDiagram out;
  std::map<int, int> newlabel;
  int next_label = 1;
  std::vector<int> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  for (int ci : keep_sorted) {
    auto& comp = d.components[ci];
    std::vector<int> edges;
    for (int e : comp) {
      int r = find(e);
      if (newlabel.count(r)) continue;
      newlabel[r] = next_label++;
      edges.push_back(newlabel[r]);
    }
    if (edges.empty()) {
      // fully merged cycle: single crossing-free edge
      int r = find(comp[0]);
      newlabel[r] = next_label++;
      edges.push_back(newlabel[r]);
    }
    out.components.push_back(edges);
  }
  for (auto& c : d.crossings) {
    if (!kept_crossing(c)) continue;
    Crossing nc{};
    for (int s = 0; s < 4; ++s) nc.slot[s] = newlabel.at(find(c.slot[s]));
    out.crossings.push_back(nc);
  }
  out.validate_and_resolve();
  return out;
}

namespace {

int max_edge_label(const LinkDiagram& d) {
  int mx = 0;
  for (auto& comp : d.components)
    for (int e : comp) mx = std::max(mx, e);
  return mx;
}

// occurrence (crossing, slot) where edge e terminates, or {-1,-1}
std::pair<int, int> end_occurrence(const LinkDiagram& d, int e) {
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    const Crossing& c = d.crossings[ci];
    if (c.under_in() == e) return {ci, 0};
    if (c.over_in() == e) return {ci, c.over_in_slot};
  }
  return {-1, -1};
}

void splice_after(std::vector<std::vector<int>>& comps, int e,
                  const std::vector<int>& inserted) {
  for (auto& comp : comps)
    for (size_t k = 0; k < comp.size(); ++k)
      if (comp[k] == e) {
        comp.insert(comp.begin() + k + 1, inserted.begin(), inserted.end());
        return;
      }
  throw PreconditionError("edge not found for splice");
}

}  // namespace

LinkDiagram reidemeister1(const LinkDiagram& d, int edge, int kink_sign) {
  LinkDiagram out = d;
  out.sites.clear();
  auto [eci, eslot] = end_occurrence(d, edge);
  int base = max_edge_label(d);
  if (eci < 0) {
    // crossing-free component: the kinked unknot is the 2-edge diagram
    int f = base + 1;
    Crossing c{};
    if (kink_sign > 0) {
      c.slot[0] = edge; c.slot[1] = edge; c.slot[2] = f; c.slot[3] = f;
    } else {
      c.slot[0] = edge; c.slot[1] = f; c.slot[2] = f; c.slot[3] = edge;
    }
    out.crossings.push_back(c);
    splice_after(out.components, edge, {f});
    out.validate_and_resolve();
    return out;
  }
  int f = base + 1, g = base + 2;
  out.crossings[eci].slot[eslot] = g;  // downstream arrival now comes from g
  Crossing c{};
  if (kink_sign > 0) {
    c.slot[0] = edge; c.slot[1] = g; c.slot[2] = f; c.slot[3] = f;
  } else {
    c.slot[0] = edge; c.slot[1] = f; c.slot[2] = f; c.slot[3] = g;
  }
  out.crossings.push_back(c);
  splice_after(out.components, edge, {f, g});
  out.validate_and_resolve();
  return out;
}

LinkDiagram reidemeister2(const LinkDiagram& d, int over_edge, int under_edge) {
  if (over_edge == under_edge)
    throw PreconditionError("R2 needs two distinct edges");
  LinkDiagram out = d;
  out.sites.clear();
  auto [uci, uslot] = end_occurrence(d, over_edge);
  auto [vci, vslot] = end_occurrence(d, under_edge);
  if (uci < 0 || vci < 0)
    throw PreconditionError("R2 on crossing-free edges not supported");
  int base = max_edge_label(d);
  int f = base + 1, g = base + 2, p = base + 3, q = base + 4;
  out.crossings[uci].slot[uslot] = g;
  out.crossings[vci].slot[vslot] = q;
  Crossing P{}, Q{};
  P.slot[0] = under_edge; P.slot[1] = f; P.slot[2] = p; P.slot[3] = over_edge;
  Q.slot[0] = p; Q.slot[1] = f; Q.slot[2] = q; Q.slot[3] = g;
  out.crossings.push_back(P);
  out.crossings.push_back(Q);
  splice_after(out.components, over_edge, {f, g});
  splice_after(out.components, under_edge, {p, q});
  out.validate_and_resolve();
  return out;
}

}  // namespace concordia
