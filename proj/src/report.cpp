#include "concordia/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace concordia {

namespace {

std::string dec9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string two_pi_frac(long long k, long long n) {
  long long g = std::gcd(k, n);
  k /= g;
  n /= g;
  if (k == 0) return "0";
  if (k == n) return "2pi";
  return "2pi*" + std::to_string(k) + "/" + std::to_string(n);
}

struct Mark {
  std::string label;
  double x = 0;  // radians
  bool has_sigma = false;
  int sigma = 0;
};

Mark jump_mark(const ProfileJump& j, bool mirror) {
  Mark m;
  if (j.rational_angle) {
    long long k = j.k, n = j.n;
    if (mirror) k = n - k;
    m.label = two_pi_frac(k, n);
    m.x = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
  } else {
    double y = ((j.y_lo + j.y_hi) / 2).convert_to<double>();
    double th = std::acos(y / 2.0);
    if (mirror) th = 2.0 * M_PI - th;
    m.x = th;
    m.label = dec9(th);
  }
  m.has_sigma = j.has_sigma_at;
  m.sigma = j.sigma_at;
  return m;
}

// arcs and jump marks over the whole circle; the lower half mirrors the
// profile, and the mirror symmetry glues the two arcs meeting at pi (the
// pairing stays nonsingular at -1, so no jump hides there)
struct Circle {
  std::vector<Mark> jumps;  // 2J marks, ascending
  std::vector<int> values;  // 2J + 1 plateau values
};

Circle full_circle(const SignatureProfile& p) {
  Circle c;
  int J = static_cast<int>(p.jumps.size());
  for (int i = 0; i < J; ++i) c.jumps.push_back(jump_mark(p.jumps[i], false));
  for (int i = J - 1; i >= 0; --i) c.jumps.push_back(jump_mark(p.jumps[i], true));
  for (int i = 0; i <= J; ++i) c.values.push_back(p.plateaus[i]);
  for (int i = J - 1; i >= 0; --i) c.values.push_back(p.plateaus[i]);
  return c;
}

Json milnor_json(const MilnorValue& v) {
  Json j;
  j["index"] = v.index;
  j["raw"] = v.raw.str();
  j["indeterminacy"] = v.indeterminacy.str();
  j["value"] = v.value.str();
  return j;
}

}  // namespace

Json json_rational(const Rat& q) {
  return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Json json_linking(const LinkingMatrix& lm) {
  Json rows = Json::array();
  for (const auto& r : lm.l) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(v.convert_to<long long>());
    rows.push_back(row);
  }
  return rows;
}

Json json_group(const AbelianGroup& g) {
  Json j;
  j["rank"] = g.rank;
  Json t = Json::array();
  for (const auto& v : g.torsion) t.push_back(v.str());
  j["torsion"] = t;
  j["description"] = g.str();
  return j;
}

Json invariants_report(const LinkDiagram& d) {
  int m = d.num_components();
  Json j;
  j["components"] = m;
  j["crossings"] = d.num_crossings();
  j["writhe"] = d.writhe();
  j["linking_matrix"] = json_linking(linking_matrix(d));
  LaurentPoly delta = alexander_polynomial(d);
  Json a;
  a["nvars"] = m;
  a["polynomial"] = delta.str();
  a["is_zero"] = delta.is_zero();
  a["trivial"] = delta.is_one_normalized();
  a["at_all_ones"] = delta.eval_all_ones().str();
  j["alexander"] = a;
  if (m >= 2) {
    Json mus = Json::array();
    for (int a1 = 1; a1 <= m; ++a1)
      for (int a2 = a1 + 1; a2 <= m; ++a2)
        mus.push_back(milnor_json(milnor_mu(d, {a1, a2})));
    for (int a1 = 1; a1 <= m; ++a1)
      for (int a2 = a1 + 1; a2 <= m; ++a2)
        for (int a3 = 1; a3 <= m; ++a3)
          if (a3 != a1 && a3 != a2)
            mus.push_back(milnor_json(milnor_mu(d, {a1, a2, a3})));
    j["milnor"] = mus;
  }
  if (m == 2) {
    TorresReport tr = torres_check(d);
    Json t;
    t["ok"] = tr.ok;
    t["degenerate_lk0"] = tr.degenerate_lk0;
    t["linking_number"] = tr.lk.convert_to<long long>();
    t["lhs"] = tr.lhs.str();
    t["rhs"] = tr.rhs.str();
    t["ones_match"] = tr.ones_match;
    j["torres"] = t;
    j["blanchfield"] =
        blanchfield_criterion(d) == BlanchfieldStatus::NotConstantlyZero
            ? "not_constantly_zero"
            : "inconclusive";
  }
  return j;
}

Json classify_report(const LinkDiagram& d) {
  RegimeVerdict v = classify(d);
  Json j;
  j["regime"] = regime_name(v.regime);
  j["components"] = v.m;
  j["linking_matrix"] = json_linking(v.lk);
  j["quotient"] = json_group(v.quotient);
  Json a;
  a["polynomial"] = v.delta.str();
  a["trivial"] = v.delta_trivial;
  j["alexander"] = a;
  j["reason"] = v.reason;
  if (v.regime == Regime::NilpotentRoute)
    j["suggested_prime"] = choose_prime(v.quotient);
  return j;
}

Json signature_report(const SeifertMatrix& v, SigConvention conv) {
  SignatureProfile prof = profile_with_convention(signature_profile(v), conv);
  Json j;
  j["size"] = v.size();
  j["convention"] = conv == SigConvention::Rho ? "rho" : "classical";
  j["arf"] = arf(v);
  Json jumps = Json::array();
  for (const auto& jp : prof.jumps) {
    Json o;
    o["rational_angle"] = jp.rational_angle;
    if (jp.rational_angle)
      o["two_pi_fraction"] = std::to_string(jp.k) + "/" + std::to_string(jp.n);
    o["cos_enclosure"] =
        Json::array({json_rational(jp.y_lo), json_rational(jp.y_hi)});
    if (jp.has_sigma_at) o["sigma"] = jp.sigma_at;
    jumps.push_back(o);
  }
  j["jumps"] = jumps;
  j["plateaus"] = prof.plateaus;
  RhoValue ri = rho_integral(v, conv);
  Json r;
  r["exact"] = ri.exact;
  r["value"] = json_rational(ri.value);
  if (!ri.exact) r["width"] = json_rational(ri.width);
  j["rho_integral"] = r;
  return j;
}

Json invariance_report(const InvarianceReport& rep) {
  Json j;
  j["hypothesis_met"] = rep.hypothesis_met;
  j["delta_equal"] = rep.delta_equal;
  j["linking_equal"] = rep.linking_equal;
  j["mu_equal"] = rep.mu_equal;
  j["ideals_equal"] = rep.ideals_equal;
  j["ideals_skipped"] = rep.ideals_skipped;
  j["all_equal"] = rep.all_equal;
  j["detail"] = rep.detail;
  return j;
}

SignatureProfile profile_with_convention(SignatureProfile prof, SigConvention conv) {
  if (conv == SigConvention::Classical) return prof;
  for (auto& p : prof.plateaus) p = -p;
  for (auto& j : prof.jumps) j.sigma_at = -j.sigma_at;
  return prof;
}

std::string profile_csv(const SignatureProfile& prof) {
  Circle c = full_circle(prof);
  std::ostringstream out;
  out << "type,start,end,theta_start,theta_end,value\n";
  std::string prev_lab = "0";
  double prev_x = 0.0;
  for (size_t i = 0; i <= c.jumps.size(); ++i) {
    bool last = i == c.jumps.size();
    std::string end_lab = last ? "2pi" : c.jumps[i].label;
    double end_x = last ? 2.0 * M_PI : c.jumps[i].x;
    out << "arc," << prev_lab << "," << end_lab << "," << dec9(prev_x) << ","
        << dec9(end_x) << "," << c.values[i] << "\n";
    if (!last) {
      out << "jump," << c.jumps[i].label << "," << c.jumps[i].label << ","
          << dec9(c.jumps[i].x) << "," << dec9(c.jumps[i].x) << ",";
      if (c.jumps[i].has_sigma) out << c.jumps[i].sigma;
      out << "\n";
      prev_lab = c.jumps[i].label;
      prev_x = c.jumps[i].x;
    }
  }
  return out.str();
}

std::string profile_svg(const SignatureProfile& prof, const std::string& label) {
  Circle c = full_circle(prof);
  int ymin = 0, ymax = 0;
  for (int v : c.values) {
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  }
  for (const auto& m : c.jumps)
    if (m.has_sigma) {
      ymin = std::min(ymin, m.sigma);
      ymax = std::max(ymax, m.sigma);
    }
  ymin -= 1;
  ymax += 1;

  const double W = 720, H = 400, L = 56, Rm = 20, T = 34, B = 44;
  const double pw = W - L - Rm, ph = H - T - B;
  auto px = [&](double th) { return L + pw * th / (2.0 * M_PI); };
  auto py = [&](double v) {
    return T + ph * (ymax - v) / static_cast<double>(ymax - ymin);
  };
  auto f = [](double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2f", v);
    return std::string(b);
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
       "width=\"720\" height=\"400\" viewBox=\"0 0 720 400\">\n";
  s << "<rect width=\"720\" height=\"400\" fill=\"#ffffff\"/>\n";
  if (!label.empty())
    s << "<text x=\"" << f(L) << "\" y=\"22\" font-family=\"monospace\" "
         "font-size=\"14\" fill=\"#222222\">" << label << "</text>\n";

  const char* xticks[5] = {"0", "pi/2", "pi", "3pi/2", "2pi"};
  for (int i = 0; i < 5; ++i) {
    double x = L + pw * i / 4.0;
    s << "<line x1=\"" << f(x) << "\" y1=\"" << f(T) << "\" x2=\"" << f(x)
      << "\" y2=\"" << f(T + ph) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    s << "<text x=\"" << f(x) << "\" y=\"" << f(T + ph + 18)
      << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#222222\" "
         "text-anchor=\"middle\">" << xticks[i] << "</text>\n";
  }
  int ystep = std::max(1, (ymax - ymin) / 10);
  for (int v = ymin; v <= ymax; v += ystep) {
    double y = py(v);
    s << "<line x1=\"" << f(L) << "\" y1=\"" << f(y) << "\" x2=\"" << f(L + pw)
      << "\" y2=\"" << f(y) << "\" stroke=\""
      << (v == 0 ? "#aaaaaa" : "#eeeeee") << "\" stroke-width=\"1\"/>\n";
    s << "<text x=\"" << f(L - 8) << "\" y=\"" << f(y + 4)
      << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#222222\" "
         "text-anchor=\"end\">" << v << "</text>\n";
  }
  s << "<rect x=\"" << f(L) << "\" y=\"" << f(T) << "\" width=\"" << f(pw)
    << "\" height=\"" << f(ph)
    << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1\"/>\n";

  double prev_x = 0.0;
  for (size_t i = 0; i <= c.jumps.size(); ++i) {
    bool last = i == c.jumps.size();
    double end_x = last ? 2.0 * M_PI : c.jumps[i].x;
    double y = py(c.values[i]);
    s << "<line x1=\"" << f(px(prev_x)) << "\" y1=\"" << f(y) << "\" x2=\""
      << f(px(end_x)) << "\" y2=\"" << f(y)
      << "\" stroke=\"#1f6fb2\" stroke-width=\"2.5\"/>\n";
    if (!last) {
      double y2 = py(c.values[i + 1]);
      s << "<line x1=\"" << f(px(end_x)) << "\" y1=\"" << f(y) << "\" x2=\""
        << f(px(end_x)) << "\" y2=\"" << f(y2)
        << "\" stroke=\"#888888\" stroke-width=\"1\" "
           "stroke-dasharray=\"3,3\"/>\n";
      if (c.jumps[i].has_sigma)
        s << "<circle cx=\"" << f(px(end_x)) << "\" cy=\""
          << f(py(c.jumps[i].sigma))
          << "\" r=\"3\" fill=\"#b03030\"/>\n";
      prev_x = end_x;
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace concordia
