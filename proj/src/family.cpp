#include "concordia/family.hpp"

#include <map>
#include <set>
#include <utility>

#include "concordia/alexander.hpp"

namespace concordia {

namespace {

Json rat_json(const Rat& q) {
  return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Rat rat_from_json(const Json& j) {
  try {
    Int n(j.at("num").get<std::string>()), d(j.at("den").get<std::string>());
    if (d == 0) throw ParseError("zero denominator in rational");
    return Rat(n, d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected a {num, den} rational");
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

SeifertMatrix config_pattern(const FamilyConfig& cfg) {
  if (!cfg.has_pattern) return seifert_from_name("trefoil_rh");
  validate_seifert(cfg.pattern);
  return cfg.pattern;
}

void check_config(const FamilyConfig& cfg) {
  if (cfg.R <= 0) throw PreconditionError("separation radius must be positive");
  if (cfg.count < 1) throw PreconditionError("family needs at least one member");
  if (cfg.n_sites < 1) throw PreconditionError("need at least one site per member");
}

void finish_certificate(FamilyCertificate& c) {
  c.all_strict = true;
  for (auto& mb : c.members) {
    mb.base_separation = rat_abs(mb.rho) > c.R;
    if (!mb.base_separation) c.all_strict = false;
  }
  c.pairs.clear();
  for (size_t a = 0; a < c.members.size(); ++a)
    for (size_t b = 0; b < a; ++b) {
      PairCheck pc;
      pc.i = c.members[a].i;
      pc.j = c.members[b].i;
      pc.lhs = rat_abs(c.members[a].rho);
      pc.rhs = c.R + Rat(c.n_sites) * rat_abs(c.members[b].rho);
      pc.strict = pc.lhs > pc.rhs;
      if (!pc.strict) c.all_strict = false;
      c.pairs.push_back(pc);
    }
}

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::FreedmanKnot: return "freedman_knot";
    case Regime::DavisException: return "davis_exception";
    case Regime::NilpotentRoute: return "nilpotent";
    case Regime::BlanchfieldRoute: return "blanchfield";
  }
  throw InternalError("unknown regime");
}

RegimeVerdict classify(const LinkDiagram& d) {
  RegimeVerdict v;
  v.m = d.num_components();
  v.lk = linking_matrix(d);
  v.quotient = lcs2_quotient(v.lk);
  v.delta = alexander_polynomial(d);
  v.delta_trivial = v.delta.is_one_normalized();
  if (v.m == 1) {
    if (v.delta_trivial) {
      v.regime = Regime::FreedmanKnot;
      v.reason = "knot with trivial Alexander polynomial: topologically slice";
    } else {
      v.regime = Regime::BlanchfieldRoute;
      v.reason = "knot with nontrivial Alexander polynomial: infinite-cyclic route";
    }
  } else if (v.m == 2 && v.delta_trivial) {
    // Torres at the second variable forces linking number +-1 here, and such
    // links form a single concordance class
    v.regime = Regime::DavisException;
    v.reason = "two components, trivial Alexander polynomial: rigid class";
  } else if (!v.quotient.trivial()) {
    v.regime = Regime::NilpotentRoute;
    v.reason = "second lower-central quotient " + v.quotient.str() +
               ": finite-cyclic route";
  } else {
    v.regime = Regime::BlanchfieldRoute;
    v.reason = "trivial quotient, nontrivial Alexander polynomial: "
               "infinite-cyclic route";
  }
  return v;
}

int choose_prime(const AbelianGroup& q) {
  if (!q.torsion.empty()) {
    Int d = q.torsion.front();
    for (Int f = 2; f * f <= d; ++f)
      if (d % f == 0) return f.convert_to<int>();
    return d.convert_to<int>();
  }
  if (q.rank > 0) return 2;
  throw PreconditionError("nilpotent quotient is trivial: no direction to build along");
}

int choose_prime(const LinkDiagram& d) {
  return choose_prime(lcs2_quotient(linking_matrix(d)));
}

FamilyCertificate build_family_nilpotent(const FamilyConfig& cfg) {
  check_config(cfg);
  if (!is_prime(cfg.p)) throw PreconditionError("p must be prime");
  SeifertMatrix pat = config_pattern(cfg);
  RhoValue c = rho_zp(pat, cfg.p, SigConvention::Rho);
  if (!c.exact) throw InternalError("rho over Z_p should always be exact");
  if (c.value == 0)
    throw PreconditionError("pattern has zero rho over Z_" + std::to_string(cfg.p));
  Rat ca = rat_abs(c.value);

  FamilyCertificate cert;
  cert.route = "nilpotent";
  cert.R = cfg.R;
  cert.p = cfg.p;
  cert.n_sites = 1;
  cert.c_value = c.value;
  Int kb = rat_ceil(cfg.R / ca);
  if (Rat(kb) * ca <= cfg.R) {
    // lands exactly on the boundary; bump to make every inequality strict
    kb += 1;
    cert.adjusted = true;
  }
  for (int i = 1; i <= cfg.count; ++i) {
    FamilyMember mb;
    mb.i = i;
    mb.k = Int(i) * kb;
    mb.rho = Rat(mb.k) * c.value;
    cert.members.push_back(mb);
  }
  finish_certificate(cert);
  if (!cert.all_strict)
    throw InternalError("nilpotent family failed its own inequalities");
  return cert;
}

FamilyCertificate build_family_blanchfield(const FamilyConfig& cfg) {
  check_config(cfg);
  SeifertMatrix pat = config_pattern(cfg);
  RhoValue t = rho_integral(pat, SigConvention::Rho);
  if (!t.exact)
    throw PreconditionError(
        "pattern rho integral is not exact; certificates need exact values");
  if (t.value == 0) throw PreconditionError("pattern has zero rho integral");
  Rat ta = rat_abs(t.value);

  FamilyCertificate cert;
  cert.route = "blanchfield";
  cert.R = cfg.R;
  cert.p = 0;
  cert.n_sites = cfg.n_sites;
  cert.c_value = t.value;
  Int prev = 0;
  for (int i = 1; i <= cfg.count; ++i) {
    Int k = strict_floor_plus_one((cfg.R + Rat(cfg.n_sites) * ta * prev) / ta);
    FamilyMember mb;
    mb.i = i;
    mb.k = k;
    mb.rho = Rat(k) * t.value;
    cert.members.push_back(mb);
    prev = k;
  }
  finish_certificate(cert);
  if (!cert.all_strict)
    throw InternalError("blanchfield family failed its own inequalities");
  return cert;
}

bool verify_certificate(const FamilyCertificate& cert) {
  if (cert.route != "nilpotent" && cert.route != "blanchfield") return false;
  if (cert.R <= 0 || cert.n_sites < 1 || cert.c_value == 0) return false;
  std::map<int, Rat> rho;
  bool ok = true;
  for (const auto& mb : cert.members) {
    if (rho.count(mb.i)) return false;
    if (mb.rho != Rat(mb.k) * cert.c_value) return false;
    if (mb.base_separation != (rat_abs(mb.rho) > cert.R)) return false;
    rho[mb.i] = mb.rho;
    ok = ok && mb.base_separation;
  }
  size_t n = cert.members.size();
  if (cert.pairs.size() != n * (n - 1) / 2) return false;
  std::set<std::pair<int, int>> seen;
  for (const auto& pc : cert.pairs) {
    if (!rho.count(pc.i) || !rho.count(pc.j) || pc.i <= pc.j) return false;
    if (!seen.insert({pc.i, pc.j}).second) return false;
    if (pc.lhs != rat_abs(rho[pc.i])) return false;
    if (pc.rhs != cert.R + Rat(cert.n_sites) * rat_abs(rho[pc.j])) return false;
    if (pc.strict != (pc.lhs > pc.rhs)) return false;
    ok = ok && pc.strict;
  }
  return ok && cert.all_strict == ok;
}

Json certificate_to_json(const FamilyCertificate& c) {
  Json j;
  j["route"] = c.route;
  j["R"] = rat_json(c.R);
  if (c.p != 0) j["p"] = c.p;
  j["n_sites"] = c.n_sites;
  j["c_value"] = rat_json(c.c_value);
  j["adjusted"] = c.adjusted;
  j["members"] = Json::array();
  for (const auto& mb : c.members)
    j["members"].push_back(Json{{"i", mb.i},
                                {"k", mb.k.str()},
                                {"rho", rat_json(mb.rho)},
                                {"base_separation", mb.base_separation}});
  j["pairs"] = Json::array();
  for (const auto& pc : c.pairs)
    j["pairs"].push_back(Json{{"i", pc.i},
                              {"j", pc.j},
                              {"lhs", rat_json(pc.lhs)},
                              {"rhs", rat_json(pc.rhs)},
                              {"strict", pc.strict}});
  j["all_strict"] = c.all_strict;
  return j;
}

FamilyCertificate certificate_from_json(const Json& j) {
  try {
    FamilyCertificate c;
    c.route = j.at("route").get<std::string>();
    c.R = rat_from_json(j.at("R"));
    c.p = j.value("p", 0);
    c.n_sites = j.at("n_sites").get<int>();
    c.c_value = rat_from_json(j.at("c_value"));
    c.adjusted = j.at("adjusted").get<bool>();
    for (const auto& mj : j.at("members")) {
      FamilyMember mb;
      mb.i = mj.at("i").get<int>();
      mb.k = Int(mj.at("k").get<std::string>());
      mb.rho = rat_from_json(mj.at("rho"));
      mb.base_separation = mj.at("base_separation").get<bool>();
      c.members.push_back(mb);
    }
    for (const auto& pj : j.at("pairs")) {
      PairCheck pc;
      pc.i = pj.at("i").get<int>();
      pc.j = pj.at("j").get<int>();
      pc.lhs = rat_from_json(pj.at("lhs"));
      pc.rhs = rat_from_json(pj.at("rhs"));
      pc.strict = pj.at("strict").get<bool>();
      c.pairs.push_back(pc);
    }
    c.all_strict = j.at("all_strict").get<bool>();
    return c;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad certificate json: ") + e.what());
  }
}

RhoLedger rho_bookkeeping(const FamilyCertificate& cert,
                          const std::vector<std::vector<int>>& eps) {
  if (eps.size() != cert.members.size())
    throw PreconditionError("eps needs one row per family member");
  std::vector<Int> used(cert.members.size());
  for (size_t a = 0; a < eps.size(); ++a) {
    if (static_cast<int>(eps[a].size()) != cert.n_sites)
      throw PreconditionError("eps row length must equal the site count");
    Int s = 0;
    for (int e : eps[a]) {
      if (e != 0 && e != 1) throw PreconditionError("eps entries must be 0 or 1");
      s += e;
    }
    used[a] = s;
  }
  RhoLedger led;
  led.all_distinguished = true;
  for (size_t a = 0; a < cert.members.size(); ++a)
    for (size_t b = 0; b <= a; ++b) {
      PairLedgerRow row;
      row.i = cert.members[a].i;
      row.j = cert.members[b].i;
      row.shift = Rat(used[a]) * cert.members[a].rho -
                  Rat(used[b]) * cert.members[b].rho;
      row.lo = -cert.R + row.shift;
      row.hi = cert.R + row.shift;
      row.zero_excluded = row.lo > 0 || row.hi < 0;
      row.hypothesis_ok = used[a] >= 1;
      if (a != b && !(row.zero_excluded && row.hypothesis_ok))
        led.all_distinguished = false;
      led.rows.push_back(row);
    }
  return led;
}

Json ledger_to_json(const RhoLedger& led) {
  Json j;
  j["rows"] = Json::array();
  for (const auto& r : led.rows)
    j["rows"].push_back(Json{{"i", r.i},
                             {"j", r.j},
                             {"shift", rat_json(r.shift)},
                             {"lo", rat_json(r.lo)},
                             {"hi", rat_json(r.hi)},
                             {"zero_excluded", r.zero_excluded},
                             {"hypothesis_ok", r.hypothesis_ok}});
  j["all_distinguished"] = led.all_distinguished;
  return j;
}

}  // namespace concordia
