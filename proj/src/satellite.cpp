#include "concordia/satellite.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "concordia/alexander.hpp"
#include "concordia/braid.hpp"
#include "concordia/magnus.hpp"

namespace concordia {

namespace {

// passage i of the string sits between strand[i] and strand[i+1]; each
// crossing is passed exactly once over and once under
struct Passage {
  int crossing;
  bool over;
};

std::vector<Passage> passage_sequence(const StringKnot& j) {
  const LinkDiagram& c = j.closure;
  int q = (int)j.strand.size();
  if (c.num_crossings() == 0) return {};
  std::vector<Passage> seq;
  std::vector<bool> used_under(c.num_crossings(), false);
  std::vector<bool> used_over(c.num_crossings(), false);
  for (int i = 0; i < q; ++i) {
    int a = j.strand[i];
    int b = j.strand[(i + 1) % q];
    int found = -1;
    bool over = false;
    for (int x = 0; x < c.num_crossings() && found < 0; ++x) {
      const Crossing& cr = c.crossings[x];
      if (!used_under[x] && cr.under_in() == a && cr.under_out() == b) {
        found = x;
        over = false;
      } else if (!used_over[x] && cr.over_in() == a && cr.over_out() == b) {
        found = x;
        over = true;
      }
    }
    if (found < 0) throw InternalError("pattern strand does not trace its diagram");
    (over ? used_over : used_under)[found] = true;
    seq.push_back({found, over});
  }
  for (int x = 0; x < c.num_crossings(); ++x)
    if (!used_under[x] || !used_over[x])
      throw InternalError("pattern strand misses a crossing passage");
  return seq;
}

void validate_pattern(const StringKnot& j) {
  if (j.closure.num_components() != 1)
    throw PreconditionError("pattern closure must be a knot");
  const std::vector<int>& comp = j.closure.components[0];
  if (j.strand.size() != comp.size())
    throw PreconditionError("pattern strand must list the whole component");
  auto it = std::find(comp.begin(), comp.end(), j.strand[0]);
  if (it == comp.end())
    throw PreconditionError("pattern strand starts off its component");
  size_t off = it - comp.begin();
  for (size_t i = 0; i < comp.size(); ++i)
    if (j.strand[i] != comp[(off + i) % comp.size()])
      throw PreconditionError("pattern strand must follow the component cycle");
}

void validate_site(const LinkDiagram& d, const InfectionSite& site) {
  if (site.strands.empty()) throw PreconditionError("infection site has no strands");
  if (!site.inside_crossings.empty())
    throw PreconditionError("site disk encloses a nontrivial tangle");
  for (auto& [e, s] : site.strands) {
    if (s != 1 && s != -1) throw PreconditionError("site strand sign must be +-1");
    d.component_of_edge(e);
  }
}

}  // namespace

StringKnot parse_string_knot(const std::string& text) {
  size_t pos = text.find("Strand");
  if (pos == std::string::npos)
    throw ParseError("pattern needs a Strand[...] section");
  size_t i = pos + 6;
  while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  if (i >= text.size() || text[i] != '[')
    throw ParseError("expected '[' after Strand");
  size_t close = text.find(']', i);
  if (close == std::string::npos) throw ParseError("unterminated Strand[...]");
  std::string body = text.substr(i + 1, close - i - 1);
  for (char& ch : body)
    if (ch == ',') ch = ' ';
  std::istringstream in(body);
  StringKnot k;
  int e;
  while (in >> e) k.strand.push_back(e);
  if (!in.eof()) throw ParseError("bad edge label in Strand[...]");
  if (k.strand.empty()) throw ParseError("empty Strand[...]");
  k.closure = parse_pd(text.substr(0, pos) + text.substr(close + 1));
  try {
    validate_pattern(k);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return k;
}

StringKnot parse_string_knot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string_knot(ss.str());
}

InfectionSite parse_site(const std::string& text) {
  size_t pos = text.find("Site");
  if (pos == std::string::npos) throw ParseError("expected Site[...]");
  size_t i = pos + 4;
  while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  if (i >= text.size() || text[i] != '[')
    throw ParseError("expected '[' after Site");
  size_t close = text.find(']', i);
  if (close == std::string::npos) throw ParseError("unterminated Site[...]");
  std::string body = text.substr(i + 1, close - i - 1);
  for (char& ch : body)
    if (ch == ',') ch = ' ';
  InfectionSite site;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      std::string suf = tok.substr(caret + 1);
      if (suf == "+") sign = 1;
      else if (suf == "-") sign = -1;
      else throw ParseError("bad passage sign in Site[...]: " + tok);
      tok = tok.substr(0, caret);
    }
    size_t used = 0;
    int edge = 0;
    try {
      edge = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad edge label in Site[...]: " + tok);
    }
    if (used != tok.size()) throw ParseError("bad edge label in Site[...]: " + tok);
    site.strands.emplace_back(edge, sign);
  }
  if (site.strands.empty()) throw ParseError("empty Site[...]");
  return site;
}

StringKnot string_knot_from_name(const std::string& name) {
  std::vector<int> letters;
  int offset = 0;
  std::stringstream ss(name);
  std::string atom;
  bool any = false;
  while (std::getline(ss, atom, '#')) {
    any = true;
    if (atom == "unknot") {
    } else if (atom == "trefoil_rh") {
      for (int i = 0; i < 3; ++i) letters.push_back(offset + 1);
      offset += 1;
    } else if (atom == "trefoil_lh") {
      for (int i = 0; i < 3; ++i) letters.push_back(-(offset + 1));
      offset += 1;
    } else if (atom == "figure8") {
      for (int i = 0; i < 2; ++i) {
        letters.push_back(offset + 1);
        letters.push_back(-(offset + 2));
      }
      offset += 2;
    } else {
      throw PreconditionError("unknown pattern name: " + atom);
    }
  }
  if (!any) throw PreconditionError("empty pattern name");
  StringKnot k;
  if (letters.empty()) {
    k.closure.components = {{1}};
    k.closure.validate_and_resolve();
    k.strand = {1};
    return k;
  }
  BraidWord w;
  w.strands = offset + 1;
  w.letters = letters;
  k.closure = braid_closure(w);
  if (k.closure.num_components() != 1)
    throw InternalError("pattern braid closure is not a knot");
  k.strand = k.closure.components[0];
  return k;
}

std::vector<Int> site_class(const LinkDiagram& d, const InfectionSite& site) {
  std::vector<Int> cls(d.num_components(), Int(0));
  for (auto& [e, s] : site.strands) cls[d.component_of_edge(e)] += s;
  return cls;
}

bool site_null_homologous(const LinkDiagram& d, const InfectionSite& site) {
  for (auto& v : site_class(d, site))
    if (v != 0) return false;
  return true;
}

int mark_site(LinkDiagram& d, const InfectionSite& site) {
  validate_site(d, site);
  d.sites.push_back(site);
  return (int)d.sites.size() - 1;
}

LinkDiagram infect(const LinkDiagram& d, const InfectionSite& site,
                   const StringKnot& pattern) {
  validate_site(d, site);
  validate_pattern(pattern);
  int cj = pattern.crossings();
  if (cj == 0) return d;

  int r = (int)site.strands.size();
  int w = pattern.writhe();
  int tau = w > 0 ? -1 : 1;
  auto seq = passage_sequence(pattern);

  std::vector<int> s(r);
  for (int k = 0; k < r; ++k) s[k] = site.strands[k].second;

  struct Ev {
    int sign = 0;
    int oin = -1, oout = -1, uin = -1, uout = -1;
  };
  int grid_n = r * r * cj;
  int twist_n = w == 0 ? 0 : r * (r - 1) * std::abs(w);
  std::vector<Ev> ev(grid_n + twist_n);
  auto grid_id = [&](int x, int t, int u) { return (x * r + t) * r + u; };

  for (int x = 0; x < cj; ++x)
    for (int t = 0; t < r; ++t)
      for (int u = 0; u < r; ++u)
        ev[grid_id(x, t, u)].sign = pattern.closure.crossings[x].sign * s[t] * s[u];

  // events met by each copy while running in the pattern's own direction;
  // copies are offset to the right of travel, so at a positive pattern
  // crossing the over bundle meets under copies in ascending order and the
  // under bundle meets over copies in descending order (swapped when negative)
  std::vector<std::vector<std::pair<int, bool>>> seq_of(r);
  for (int k = 0; k < r; ++k) {
    for (auto& p : seq) {
      int eps = pattern.closure.crossings[p.crossing].sign;
      for (int step = 0; step < r; ++step) {
        if (p.over) {
          int u = eps > 0 ? step : r - 1 - step;
          seq_of[k].push_back({grid_id(p.crossing, k, u), true});
        } else {
          int t = eps > 0 ? r - 1 - step : step;
          seq_of[k].push_back({grid_id(p.crossing, t, k), false});
        }
      }
    }
  }

  // framing compensation ((s1...s_{r-1})^r)^{|w|}, every letter of sign tau
  if (twist_n > 0) {
    std::vector<int> at(r);
    for (int i = 0; i < r; ++i) at[i] = i;
    int id = grid_n;
    for (int rep = 0; rep < std::abs(w) * r; ++rep)
      for (int pos = 0; pos + 1 < r; ++pos, ++id) {
        int a = at[pos], b = at[pos + 1];
        int over = tau > 0 ? a : b;
        int under = over == a ? b : a;
        ev[id].sign = tau * s[a] * s[b];
        seq_of[over].push_back({id, true});
        seq_of[under].push_back({id, false});
        std::swap(at[pos], at[pos + 1]);
      }
    for (int i = 0; i < r; ++i)
      if (at[i] != i) throw InternalError("twist region is not a pure braid");
  }

  for (int k = 0; k < r; ++k)
    if (s[k] < 0) std::reverse(seq_of[k].begin(), seq_of[k].end());

  int next_edge = 0;
  for (auto& comp : d.components)
    for (int e : comp) next_edge = std::max(next_edge, e);
  ++next_edge;

  std::set<int> in_crossings;
  for (auto& c : d.crossings)
    for (int i = 0; i < 4; ++i) in_crossings.insert(c.slot[i]);

  // site passages grouped per edge, kept in site order along the edge
  std::map<int, std::vector<int>> passages_of;
  for (int k = 0; k < r; ++k) passages_of[site.strands[k].first].push_back(k);

  // cut pieces: piece 0 keeps the label; on a crossing-free component the
  // last passage flows back into the original edge
  std::map<int, std::vector<int>> piece;
  for (auto& [e, ps] : passages_of) {
    bool loose = !in_crossings.count(e);
    std::vector<int>& pl = piece[e];
    pl.push_back(e);
    int fresh = (int)ps.size() - (loose ? 1 : 0);
    for (int j = 0; j < fresh; ++j) pl.push_back(next_edge++);
    if (loose) pl.push_back(e);
  }

  std::vector<int> in_of(r), out_of(r);
  for (auto& [e, ps] : passages_of)
    for (int j = 0; j < (int)ps.size(); ++j) {
      in_of[ps[j]] = piece[e][j];
      out_of[ps[j]] = piece[e][j + 1];
    }

  // chain of edges along each copy in travel order; interior labels fresh
  std::vector<std::vector<int>> chain(r);
  for (int k = 0; k < r; ++k) {
    int m = (int)seq_of[k].size();
    std::vector<int>& c = chain[k];
    c.resize(m + 1);
    c[0] = in_of[k];
    c[m] = out_of[k];
    for (int i = 1; i < m; ++i) c[i] = next_edge++;
    for (int i = 0; i < m; ++i) {
      auto [id, over] = seq_of[k][i];
      if (over) {
        ev[id].oin = c[i];
        ev[id].oout = c[i + 1];
      } else {
        ev[id].uin = c[i];
        ev[id].uout = c[i + 1];
      }
    }
  }

  LinkDiagram out;
  out.crossings = d.crossings;
  for (auto& [e, pl] : piece) {
    int last = pl.back();
    if (last == e) continue;
    bool done = false;
    for (auto& cr : out.crossings) {
      if (cr.under_in() == e) {
        cr.slot[0] = last;
        done = true;
        break;
      }
      if (cr.over_in() == e) {
        cr.slot[cr.over_in_slot] = last;
        done = true;
        break;
      }
    }
    if (!done) throw InternalError("site edge head not found");
  }

  for (auto& e : ev) {
    if (e.oin < 0 || e.oout < 0 || e.uin < 0 || e.uout < 0 || e.sign == 0)
      throw InternalError("infection event incompletely wired");
    Crossing cr{};
    cr.slot[0] = e.uin;
    cr.slot[2] = e.uout;
    if (e.sign > 0) {
      cr.slot[3] = e.oin;
      cr.slot[1] = e.oout;
    } else {
      cr.slot[1] = e.oin;
      cr.slot[3] = e.oout;
    }
    out.crossings.push_back(cr);
  }

  for (auto& comp : d.components) {
    std::vector<int> nc;
    for (int e : comp) {
      nc.push_back(e);
      auto it = passages_of.find(e);
      if (it == passages_of.end()) continue;
      for (int j = 0; j < (int)it->second.size(); ++j) {
        std::vector<int>& ch = chain[it->second[j]];
        for (int i = 1; i + 1 < (int)ch.size(); ++i) nc.push_back(ch[i]);
        int outp = piece[e][j + 1];
        if (outp != e) nc.push_back(outp);
      }
    }
    out.components.push_back(nc);
  }

  out.validate_and_resolve();
  if (out.num_crossings() != d.num_crossings() + grid_n + twist_n)
    throw InternalError("crossing count identity violated");
  if (out.num_components() != d.num_components())
    throw InternalError("infection changed the component count");
  for (int i = 0; i < grid_n + twist_n; ++i)
    if (out.crossings[d.num_crossings() + i].sign != ev[i].sign)
      throw InternalError("infection crossing sign mismatch");
  return out;
}

namespace {

Int reduce_mod(const Int& raw, const Int& indet) {
  if (indet == 0) return raw;
  Int v = raw % indet;
  if (v < 0) v += indet;
  return v;
}

bool mu_matches(const LinkDiagram& a, const LinkDiagram& b,
                const std::vector<int>& index, std::ostream& detail) {
  MilnorValue va = milnor_mu(a, index);
  MilnorValue vb = milnor_mu(b, index);
  bool ok = va.indeterminacy == vb.indeterminacy &&
            reduce_mod(va.raw, va.indeterminacy) == reduce_mod(vb.raw, vb.indeterminacy);
  if (!ok) {
    detail << "mu(";
    for (int i : index) detail << i;
    detail << ") " << va.raw << " (mod " << va.indeterminacy << ") vs " << vb.raw
           << " (mod " << vb.indeterminacy << ")\n";
  }
  return ok;
}

}  // namespace

InvarianceReport verify_homology_invariance(const LinkDiagram& d,
                                            const InfectionSite& site,
                                            const StringKnot& pattern) {
  InvarianceReport rep;
  rep.hypothesis_met = site_null_homologous(d, site);
  LinkDiagram inf = infect(d, site, pattern);
  std::ostringstream detail;
  if (!rep.hypothesis_met) detail << "hypothesis violated: site class nonzero\n";

  LaurentPoly da = alexander_polynomial(d);
  LaurentPoly db = alexander_polynomial(inf);
  rep.delta_equal = da == db;
  if (!rep.delta_equal) detail << "delta " << da.str() << " vs " << db.str() << "\n";

  rep.linking_equal = linking_matrix(d).l == linking_matrix(inf).l;
  if (!rep.linking_equal) detail << "linking matrix changed\n";

  rep.mu_equal = true;
  int m = d.num_components();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      if (!mu_matches(d, inf, {i, j}, detail)) rep.mu_equal = false;
      for (int k = 1; k <= m; ++k)
        if (k != i && k != j && !mu_matches(d, inf, {i, j, k}, detail))
          rep.mu_equal = false;
    }

  // number of size-(n-1-k) minors of the column-deleted n x (n-1) matrix
  auto minor_count = [](int n, int k) -> Int {
    int s = n - 1 - k;
    if (s <= 0) return Int(0);
    Int c1 = 1, c2 = 1;
    for (int i = 0; i < s; ++i) {
      c1 = c1 * (n - i) / (i + 1);
      c2 = c2 * (n - 1 - i) / (i + 1);
    }
    return c1 * c2;
  };
  const Int minor_budget = 600;
  rep.ideals_equal = true;
  for (int k = 0; k <= 4; ++k) {
    if (minor_count(d.num_crossings(), k) > minor_budget ||
        minor_count(inf.num_crossings(), k) > minor_budget) {
      rep.ideals_skipped = true;
      detail << "ideal " << k << " skipped: over minor budget\n";
      continue;
    }
    LaurentPoly ga = ideal_gcd_summary(elementary_ideal(d, k), m);
    LaurentPoly gb = ideal_gcd_summary(elementary_ideal(inf, k), m);
    if (!(ga == gb)) {
      rep.ideals_equal = false;
      detail << "ideal " << k << " gcd " << ga.str() << " vs " << gb.str() << "\n";
    }
  }

  rep.all_equal =
      rep.delta_equal && rep.linking_equal && rep.mu_equal && rep.ideals_equal;
  rep.detail = detail.str();
  return rep;
}

}  // namespace concordia
