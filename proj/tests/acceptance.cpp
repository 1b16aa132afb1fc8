// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Expected values are hand-checkable classics or come from the independent
// oracle below, never from the library pipeline under test.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "concordia/alexander.hpp"
#include "concordia/family.hpp"
#include "concordia/magnus.hpp"
#include "concordia/satellite.hpp"
#include "concordia/signature.hpp"
#include "concordia/snf.hpp"
#include "test_util.hpp"

using namespace concordia;
using namespace testutil;

namespace oracle {

// Independent one-variable Alexander computation: arcs by union-find,
// Wirtinger relators as explicit words, the Fox rule applied mechanically,
// minors by Laplace, gcd by primitive pseudo-division. Shares nothing with
// the library pipeline.

using Poly = std::map<int, long long>;  // exponent -> coefficient

void add_term(Poly& p, int e, long long c) {
  p[e] += c;
  if (p[e] == 0) p.erase(e);
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
  return r;
}

struct Letter {
  int gen;
  int sgn;
};

// d(word)/d(gen), abelianized onto powers of a single variable
Poly fox(const std::vector<Letter>& w, int g) {
  Poly out;
  int pre = 0;
  for (const auto& l : w) {
    if (l.sgn > 0) {
      if (l.gen == g) add_term(out, pre, 1);
      pre += 1;
    } else {
      pre -= 1;
      if (l.gen == g) add_term(out, pre, -1);
    }
  }
  return out;
}

int find_root(std::vector<int>& up, int v) {
  while (up[v] != v) v = up[v] = up[up[v]];
  return v;
}

Poly det(const std::vector<std::vector<Poly>>& m) {
  size_t n = m.size();
  if (n == 0) return Poly{{0, 1}};
  if (n == 1) return m[0][0];
  Poly r;
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0].empty()) continue;
    std::vector<std::vector<Poly>> minor;
    for (size_t a = 0; a < n; ++a) {
      if (a == i) continue;
      minor.push_back(std::vector<Poly>(m[a].begin() + 1, m[a].end()));
    }
    Poly cof = mul(m[i][0], det(minor));
    for (const auto& [e, c] : cof) add_term(r, e, i % 2 ? -c : c);
  }
  return r;
}

// strip x^k factors and the content, force a positive leading coefficient
std::vector<long long> prim_vec(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  size_t low = 0;
  while (low < v.size() && v[low] == 0) ++low;
  v.erase(v.begin(), v.begin() + low);
  if (v.empty()) return v;
  long long g = 0;
  for (long long c : v) g = std::gcd(g, std::abs(c));
  for (long long& c : v) c /= g;
  if (v.back() < 0)
    for (long long& c : v) c = -c;
  return v;
}

std::vector<long long> from_poly(const Poly& p) {
  std::vector<long long> v;
  if (p.empty()) return v;
  int lo = p.begin()->first, hi = p.rbegin()->first;
  v.assign(hi - lo + 1, 0);
  for (const auto& [e, c] : p) v[e - lo] = c;
  return prim_vec(v);
}

std::vector<long long> poly_gcd(std::vector<long long> a,
                                std::vector<long long> b) {
  a = prim_vec(a);
  b = prim_vec(b);
  while (!a.empty() && !b.empty()) {
    if (a.size() < b.size()) std::swap(a, b);
    long long la = a.back(), lb = b.back();
    size_t shift = a.size() - b.size();
    std::vector<long long> t(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) t[i] = a[i] * lb;
    for (size_t i = 0; i < b.size(); ++i) t[i + shift] -= b[i] * la;
    a = prim_vec(t);
  }
  return a.empty() ? b : a;
}

// normalized coefficient vector of the knot polynomial, lowest degree first
std::vector<long long> knot_alexander(const LinkDiagram& d) {
  int maxe = 0;
  for (const auto& c : d.crossings)
    for (int s = 0; s < 4; ++s) maxe = std::max(maxe, c.slot[s]);
  std::vector<int> up(maxe + 1);
  std::iota(up.begin(), up.end(), 0);
  for (const auto& c : d.crossings) {
    int a = find_root(up, c.over_in()), b = find_root(up, c.over_out());
    up[a] = b;
  }
  std::map<int, int> arc_id;
  auto arc = [&](int e) {
    int r = find_root(up, e);
    auto it = arc_id.find(r);
    if (it == arc_id.end()) it = arc_id.emplace(r, (int)arc_id.size()).first;
    return it->second;
  };
  std::vector<std::vector<Letter>> relators;
  for (const auto& c : d.crossings) {
    int o = arc(c.over_in());
    int ui = arc(c.under_in()), uo = arc(c.under_out());
    // uo = o^s ui o^-s, written out as uo^-1 o^s ui o^-s
    relators.push_back({{uo, -1}, {o, c.sign}, {ui, 1}, {o, -c.sign}});
  }
  size_t n = arc_id.size();
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : relators) {
    std::vector<Poly> row;
    for (size_t g = 1; g < n; ++g) row.push_back(fox(r, (int)g));
    rows.push_back(row);
  }
  std::vector<long long> g;
  for (size_t skip = 0; skip < rows.size(); ++skip) {
    std::vector<std::vector<Poly>> minor;
    for (size_t a = 0; a < rows.size(); ++a)
      if (a != skip) minor.push_back(rows[a]);
    g = poly_gcd(g, from_poly(det(minor)));
  }
  return g;
}

}  // namespace oracle

namespace {

const std::vector<std::string> kCorpus = {
    "unknot",  "hopf_pos",  "trefoil_rh", "chain4",  "unlink2", "unlink3",
    "figure8", "borromean", "whitehead",  "torus26", "l2lk1"};

bool c1_hopf_trivial(std::string& why) {
  LaurentPoly delta = alexander_polynomial(load_corpus("hopf_pos"));
  if (!delta.is_one_normalized()) {
    why = "got " + delta.str();
    return false;
  }
  return true;
}

bool c2_trefoil_oracle(std::string& why) {
  // calibrate the oracle on a second classic before trusting it
  std::vector<long long> f8 = oracle::knot_alexander(load_corpus("figure8"));
  if (f8 != std::vector<long long>{1, -3, 1}) {
    why = "oracle miscomputed the figure-eight polynomial";
    return false;
  }
  LinkDiagram d = load_corpus("trefoil_rh");
  std::vector<long long> o = oracle::knot_alexander(d);
  if (o != std::vector<long long>{1, -1, 1}) {
    std::ostringstream ss;
    for (long long c : o) ss << c << " ";
    why = "oracle computed [ " + ss.str() + "]";
    return false;
  }
  LaurentPoly want = LaurentPoly::parse("1 - x1 + x1^2", 1).normalized();
  LaurentPoly delta = alexander_polynomial(d);
  if (!(delta == want)) {
    why = "library got " + delta.str();
    return false;
  }
  return true;
}

bool c3_all_ones_vanish(std::string& why) {
  int seen = 0;
  for (const auto& name : kCorpus) {
    LinkDiagram d = load_corpus(name);
    if (d.num_components() < 3) continue;
    ++seen;
    Int v = alexander_polynomial(d).eval_all_ones();
    if (v != 0) {
      why = name + " gave " + v.str();
      return false;
    }
  }
  if (seen < 3) {
    why = "only " + std::to_string(seen) + " many-component corpus links";
    return false;
  }
  return true;
}

bool c4_cyclic_quotients(std::string& why) {
  for (int n = -10; n <= 10; ++n) {
    LinkingMatrix lm;
    lm.m = 2;
    lm.l = {{Int(0), Int(n)}, {Int(n), Int(0)}};
    AbelianGroup q = lcs2_quotient(lm);
    bool ok;
    if (n == 0)
      ok = q.rank == 1 && q.torsion.empty();
    else if (n == 1 || n == -1)
      ok = q.trivial();
    else
      ok = q.rank == 0 && q.torsion == std::vector<Int>{Int(std::abs(n))};
    if (!ok) {
      why = "linking number " + std::to_string(n) + " gave " + q.str();
      return false;
    }
  }
  return true;
}

bool c5_rank_bound(std::string& why) {
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<int> comp(1, 5), entry(-9, 9);
  for (int t = 0; t < 1000; ++t) {
    int m = comp(rng);
    LinkingMatrix lm;
    lm.m = m;
    lm.l.assign(m, std::vector<Int>(m, Int(0)));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        int v = entry(rng);
        lm.l[i][j] = lm.l[j][i] = v;
      }
    AbelianGroup q = lcs2_quotient(lm);
    if (q.rank < (m - 1) * (m - 2) / 2) {
      why = "trial " + std::to_string(t) + " with m=" + std::to_string(m) +
            " gave rank " + std::to_string(q.rank);
      return false;
    }
  }
  return true;
}

bool c6_torres(std::string& why) {
  int seen = 0;
  for (const auto& name : kCorpus) {
    LinkDiagram d = load_corpus(name);
    if (d.num_components() != 2) continue;
    if (linking_matrix(d).lk(0, 1) == 0) continue;
    ++seen;
    TorresReport tr = torres_check(d);
    if (!tr.ok || !tr.ones_match) {
      why = name + " failed the specialization identity";
      return false;
    }
  }
  if (seen < 3) {
    why = "only " + std::to_string(seen) + " linked 2-component corpus links";
    return false;
  }
  return true;
}

bool c7_rho_integral(std::string& why) {
  RhoValue r = rho_integral(seifert_from_name("trefoil_rh"), SigConvention::Rho);
  if (!r.exact || r.value != Rat(4, 3)) {
    why = "got " + rat_str(r.value) + (r.exact ? "" : " (inexact)");
    return false;
  }
  return true;
}

bool c8_kfold_rho(std::string& why) {
  SeifertMatrix t = seifert_from_name("trefoil_rh");
  SeifertMatrix v;
  for (int k = 1; k <= 50; ++k) {
    v = k == 1 ? t : connected_sum(v, t);
    RhoValue r = rho_zp(v, 3, SigConvention::Rho);
    if (!r.exact || r.value != Rat(4 * k, 3)) {
      why = "k=" + std::to_string(k) + " gave " + rat_str(r.value);
      return false;
    }
  }
  return true;
}

bool c9_family_certificate(std::string& why) {
  FamilyConfig cfg;
  cfg.R = 100;
  cfg.p = 3;
  cfg.count = 5;
  FamilyCertificate cert = build_family_nilpotent(cfg);
  if (!cert.adjusted) {
    why = "boundary equality at radius 100 was not adjusted";
    return false;
  }
  if (cert.members.size() != 5 || cert.pairs.size() != 10) {
    why = "wrong member or pair count";
    return false;
  }
  for (const auto& pc : cert.pairs)
    if (!pc.strict) {
      why = "pair " + std::to_string(pc.i) + "," + std::to_string(pc.j) +
            " not strict";
      return false;
    }
  if (!cert.all_strict || !verify_certificate(cert)) {
    why = "certificate failed reverification";
    return false;
  }
  Json j = certificate_to_json(cert);
  FamilyCertificate back = certificate_from_json(Json::parse(j.dump()));
  if (!verify_certificate(back) || certificate_to_json(back) != j) {
    why = "json round trip changed the certificate";
    return false;
  }
  return true;
}

bool c10_infection_invariance(std::string& why) {
  struct Triple {
    const char* link;
    int edge;
    const char* pattern;
  };
  const std::vector<Triple> triples = {{"torus26", 1, "trefoil_lh"},
                                       {"whitehead", 2, "trefoil_rh"},
                                       {"borromean", 3, "figure8"},
                                       {"chain4", 2, "trefoil_rh"},
                                       {"unlink2", 1, "trefoil_rh"}};
  for (const auto& t : triples) {
    LinkDiagram d = load_corpus(t.link);
    InfectionSite site;
    site.strands = {{t.edge, 1}, {t.edge, -1}};
    InvarianceReport rep =
        verify_homology_invariance(d, site, string_knot_from_name(t.pattern));
    if (!rep.hypothesis_met || !rep.delta_equal || !rep.linking_equal ||
        !rep.mu_equal || !rep.all_equal) {
      why = std::string(t.link) + " x " + t.pattern + ": " + rep.detail;
      return false;
    }
  }
  return true;
}

bool c11_arf(std::string& why) {
  int a1 = arf(seifert_from_name("trefoil_rh"));
  int a2 = arf(seifert_from_name("trefoil_rh#trefoil_rh"));
  if (a1 != 1 || a2 != 0) {
    why = "got " + std::to_string(a1) + " and " + std::to_string(a2);
    return false;
  }
  return true;
}

bool c12_regimes(std::string& why) {
  struct Want {
    const char* link;
    Regime regime;
  };
  const std::vector<Want> wants = {{"hopf_pos", Regime::DavisException},
                                   {"borromean", Regime::NilpotentRoute},
                                   {"whitehead", Regime::NilpotentRoute}};
  for (const auto& w : wants) {
    LinkDiagram d = load_corpus(w.link);
    RegimeVerdict v = classify(d);
    if (v.regime != w.regime) {
      why = std::string(w.link) + " classified as " + regime_name(v.regime);
      return false;
    }
    AbelianGroup q = lcs2_quotient(linking_matrix(d));
    if (v.quotient.rank != q.rank || v.quotient.torsion != q.torsion ||
        !(v.delta == alexander_polynomial(d)) || v.reason.empty()) {
      why = std::string(w.link) + " evidence does not re-derive";
      return false;
    }
  }
  return true;
}

struct Criterion {
  std::string label;
  double budget;  // seconds; 0 = untimed
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"hopf link has trivial alexander polynomial", 0.1, c1_hopf_trivial},
      {"right trefoil matches an independent fox-calculus oracle", 0.5,
       c2_trefoil_oracle},
      {"3- and 4-component corpus links vanish at all-ones", 0,
       c3_all_ones_vanish},
      {"two-component quotients are cyclic of order |lk|, trivial iff 1", 0,
       c4_cyclic_quotients},
      {"quotient rank bound holds on 1000 random linking matrices", 5.0,
       c5_rank_bound},
      {"torres specialization holds on linked 2-component corpus entries", 0,
       c6_torres},
      {"rho integral of the right trefoil is exactly 4/3", 0.5,
       c7_rho_integral},
      {"rho over Z_3 of k-fold trefoil sums is exactly 4k/3, k <= 50", 0,
       c8_kfold_rho},
      {"family certificate at radius 100 separates 5 members pairwise", 2.0,
       c9_family_certificate},
      {"infection at null-homologous sites preserves abelian invariants", 30.0,
       c10_infection_invariance},
      {"arf is 1 for the trefoil and 0 for its square", 0, c11_arf},
      {"regime classification is correct with re-derivable evidence", 0,
       c12_regimes},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = criteria[i].run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    bool in_budget = criteria[i].budget == 0 || el < criteria[i].budget;
    if (ok && !in_budget) why = "over time budget";
    bool pass = ok && in_budget;
    if (!pass) ++failed;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "")
         << i + 1 << "  " << criteria[i].label << "  [";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", el);
    line << buf << "s";
    if (criteria[i].budget > 0) {
      std::snprintf(buf, sizeof buf, "%g", criteria[i].budget);
      line << " < " << buf << "s";
    }
    line << "]";
    if (!pass && !why.empty()) line << "  " << why;
    std::cout << line.str() << "\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
