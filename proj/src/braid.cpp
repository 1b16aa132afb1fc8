#include "concordia/braid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace concordia {

BraidWord parse_braid(const std::string& text, int strands) {
  BraidWord w;
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  int v;
  while (in >> v) {
    if (v == 0) throw ParseError("braid letter 0");
    w.letters.push_back(v);
  }
  if (!in.eof()) throw ParseError("bad braid word '" + text + "'");
  int need = 1;
  for (int l : w.letters) need = std::max(need, std::abs(l) + 1);
  w.strands = strands > 0 ? strands : need;
  if (w.strands < need)
    throw ParseError("braid letter exceeds strand count");
  return w;
}

LinkDiagram braid_closure(const BraidWord& w) {
  if (w.strands < 1) throw PreconditionError("braid needs at least one strand");
  int n = w.strands;
  std::vector<int> pos(n + 1);
  for (int k = 1; k <= n; ++k) pos[k] = k;
  int fresh = n + 1;
  std::vector<Crossing> xs;
  std::map<int, int> succ;
  for (int l : w.letters) {
    int i = std::abs(l);
    int a = pos[i], b = pos[i + 1];
    int out_w = fresh++, out_e = fresh++;
    Crossing c{};
    if (l > 0) {
      // west strand over: slots from the incoming under-edge (east, arriving SE)
      c.slot[0] = b; c.slot[1] = out_e; c.slot[2] = out_w; c.slot[3] = a;
      succ[b] = out_w;
      succ[a] = out_e;
    } else {
      // west strand under, arriving SW
      c.slot[0] = a; c.slot[1] = b; c.slot[2] = out_e; c.slot[3] = out_w;
      succ[a] = out_e;
      succ[b] = out_w;
    }
    xs.push_back(c);
    pos[i] = out_w;
    pos[i + 1] = out_e;
  }
  // closure: top of position k joins bottom of position k
  std::map<int, int> rename;
  for (int k = 1; k <= n; ++k)
    if (pos[k] != k) rename[pos[k]] = k;
  auto rn = [&](int e) { return rename.count(e) ? rename[e] : e; };
  for (auto& c : xs)
    for (int s = 0; s < 4; ++s) c.slot[s] = rn(c.slot[s]);
  std::map<int, int> succ2;
  for (auto& [e, f] : succ) succ2[rn(e)] = rn(f);

  LinkDiagram d;
  d.crossings = xs;
  std::map<int, bool> seen;
  for (int k = 1; k <= n; ++k) seen[k] = false;
  for (auto& [e, f] : succ2) seen[e] = false;
  for (auto& [e0, dummy] : seen) {
    if (seen[e0]) continue;
    std::vector<int> comp;
    int e = e0;
    do {
      comp.push_back(e);
      seen[e] = true;
      e = succ2.count(e) ? succ2[e] : e0;  // crossing-free strand closes on itself
    } while (e != e0);
    d.components.push_back(comp);
  }
  d.validate_and_resolve();
  return d;
}

}  // namespace concordia
