#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concordia/braid.hpp"
#include "concordia/report.hpp"

using namespace concordia;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write " + out);
  f << text;
}

void emit(const Json& j, const std::string& out) {
  write_text(j.dump(2) + "\n", out);
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
}

std::vector<std::vector<int>> parse_eps(const std::string& text) {
  std::vector<std::vector<int>> eps;
  std::vector<int> row;
  for (char ch : text) {
    if (ch == ';') {
      eps.push_back(row);
      row.clear();
    } else if (ch == '0' || ch == '1') {
      row.push_back(ch - '0');
    } else if (ch != ' ' && ch != ',') {
      throw ParseError(std::string("bad eps character: ") + ch);
    }
  }
  if (!row.empty()) eps.push_back(row);
  if (eps.empty()) throw ParseError("empty eps specification");
  return eps;
}

SeifertMatrix pattern_matrix(const std::string& name, const std::string& file) {
  if (!name.empty() && !file.empty())
    throw ParseError("give either a pattern name or a pattern file, not both");
  if (!file.empty()) return parse_seifert(read_file(file));
  return seifert_from_name(name.empty() ? "trefoil_rh" : name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abelian-cover concordance invariants for link diagrams"};
  app.set_version_flag("--version", "concordia 0.1.0");
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "write elapsed wall-clock time to stderr");

  std::string inv_pd, inv_out;
  auto* inv = app.add_subcommand("invariants",
                                 "linking, Alexander, Milnor, Torres data");
  inv->add_option("pd", inv_pd, "PD file")->required();
  inv->add_option("-o,--out", inv_out, "write JSON here instead of stdout");

  std::string cls_pd, cls_out;
  auto* cls = app.add_subcommand("classify",
                                 "which family construction fits the link");
  cls->add_option("pd", cls_pd, "PD file")->required();
  cls->add_option("-o,--out", cls_out, "write JSON here instead of stdout");

  std::string br_word, br_out;
  int br_strands = 0;
  auto* br = app.add_subcommand("braid", "PD diagram of a braid closure");
  br->add_option("word", br_word, "signed letters, e.g. \"1 -2 1 -2\"")
      ->required();
  br->add_option("--strands", br_strands, "strand count (default: inferred)");
  br->add_option("-o,--out", br_out, "write the PD here instead of stdout");

  std::string if_pd, if_site, if_pat, if_pat_file, if_out;
  bool if_check = false;
  auto* inf = app.add_subcommand("infect",
                                 "tie a pattern knot into a site of a link");
  inf->add_option("pd", if_pd, "PD file")->required();
  inf->add_option("--site", if_site, "Site[...] passage list")->required();
  inf->add_option("--pattern", if_pat,
                  "pattern name, e.g. trefoil_rh (default)");
  inf->add_option("--pattern-file", if_pat_file, "PD + Strand[...] file");
  inf->add_flag("--check", if_check,
                "verify abelian invariants instead of printing the diagram");
  inf->add_option("-o,--out", if_out, "write output here instead of stdout");

  std::string sg_name, sg_file, sg_conv = "rho", sg_csv, sg_svg, sg_out;
  std::vector<int> sg_zp;
  auto* sg = app.add_subcommand("signature",
                                "signature profile of a Seifert matrix");
  sg->add_option("--name", sg_name, "built-in matrix, e.g. trefoil_rh");
  sg->add_option("--file", sg_file, "Seifert matrix file");
  sg->add_option("--convention", sg_conv, "rho or classical")
      ->check(CLI::IsMember({"rho", "classical"}));
  sg->add_option("--rho-zp", sg_zp, "also report rho over Z_p (repeatable)");
  sg->add_option("--csv", sg_csv, "write the profile as CSV here");
  sg->add_option("--svg", sg_svg, "write a step plot here");
  sg->add_option("-o,--out", sg_out, "write JSON here instead of stdout");

  std::string fm_route, fm_from, fm_R, fm_pat, fm_pat_file, fm_verify, fm_eps,
      fm_out;
  int fm_p = 0, fm_count = 3, fm_sites = 1;
  auto* fm = app.add_subcommand("family",
                                "certificate for a non-concordant family");
  fm->add_option("--route", fm_route, "nilpotent or blanchfield")
      ->check(CLI::IsMember({"nilpotent", "blanchfield"}));
  fm->add_option("--from", fm_from, "pick the route by classifying this PD");
  fm->add_option("-R,--radius", fm_R, "separation radius (rational)");
  fm->add_option("--p", fm_p, "prime for the nilpotent route");
  fm->add_option("--count", fm_count, "number of members")
      ->capture_default_str();
  fm->add_option("--sites", fm_sites, "sites per member (blanchfield)")
      ->capture_default_str();
  fm->add_option("--pattern", fm_pat, "pattern matrix name");
  fm->add_option("--pattern-file", fm_pat_file, "pattern matrix file");
  fm->add_option("--verify", fm_verify, "reverify this certificate file");
  fm->add_option("--eps", fm_eps,
                 "site usage rows like \"11;10;01\": adds the rho ledger");
  fm->add_option("-o,--out", fm_out, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    if (inv->parsed()) {
      emit(invariants_report(parse_pd_file(inv_pd)), inv_out);
    } else if (cls->parsed()) {
      emit(classify_report(parse_pd_file(cls_pd)), cls_out);
    } else if (br->parsed()) {
      LinkDiagram d = braid_closure(parse_braid(br_word, br_strands));
      write_text(d.serialize() + "\n", br_out);
    } else if (inf->parsed()) {
      if (!if_pat.empty() && !if_pat_file.empty())
        throw ParseError("give either a pattern name or a pattern file");
      LinkDiagram d = parse_pd_file(if_pd);
      InfectionSite site = parse_site(if_site);
      StringKnot pat = if_pat_file.empty()
                           ? string_knot_from_name(
                                 if_pat.empty() ? "trefoil_rh" : if_pat)
                           : parse_string_knot_file(if_pat_file);
      if (if_check) {
        emit(invariance_report(verify_homology_invariance(d, site, pat)),
             if_out);
      } else {
        write_text(infect(d, site, pat).serialize() + "\n", if_out);
      }
    } else if (sg->parsed()) {
      if (sg_name.empty() == sg_file.empty())
        throw ParseError("give exactly one of --name and --file");
      SeifertMatrix v = sg_file.empty() ? seifert_from_name(sg_name)
                                        : parse_seifert(read_file(sg_file));
      validate_seifert(v);
      SigConvention conv = sg_conv == "classical" ? SigConvention::Classical
                                                  : SigConvention::Rho;
      Json j = signature_report(v, conv);
      if (!sg_zp.empty()) {
        Json arr = Json::array();
        for (int p : sg_zp) {
          RhoValue rv = rho_zp(v, p, conv);
          arr.push_back(Json{{"p", p}, {"value", json_rational(rv.value)}});
        }
        j["rho_zp"] = arr;
      }
      SignatureProfile prof =
          profile_with_convention(signature_profile(v), conv);
      std::string label = sg_file.empty() ? sg_name : sg_file;
      if (!sg_csv.empty()) write_text(profile_csv(prof), sg_csv);
      if (!sg_svg.empty()) write_text(profile_svg(prof, label), sg_svg);
      emit(j, sg_out);
    } else if (fm->parsed()) {
      if (!fm_verify.empty()) {
        Json cj = parse_json_file(fm_verify);
        if (cj.contains("certificate")) cj = cj.at("certificate");
        FamilyCertificate cert = certificate_from_json(cj);
        Json j;
        j["verified"] = verify_certificate(cert);
        j["route"] = cert.route;
        j["members"] = cert.members.size();
        emit(j, fm_out);
      } else {
        if (fm_R.empty()) throw ParseError("--radius is required to build");
        Json j;
        std::string route = fm_route;
        if (route.empty() == fm_from.empty())
          throw ParseError("give exactly one of --route and --from");
        FamilyConfig cfg;
        cfg.R = parse_rat(fm_R);
        cfg.count = fm_count;
        cfg.n_sites = fm_sites;
        if (!fm_pat.empty() || !fm_pat_file.empty()) {
          cfg.pattern = pattern_matrix(fm_pat, fm_pat_file);
          cfg.has_pattern = true;
        }
        if (!fm_from.empty()) {
          LinkDiagram d = parse_pd_file(fm_from);
          RegimeVerdict v = classify(d);
          j["base"] = classify_report(d);
          if (v.regime == Regime::NilpotentRoute) {
            route = "nilpotent";
            cfg.p = fm_p > 0 ? fm_p : choose_prime(v.quotient);
          } else if (v.regime == Regime::BlanchfieldRoute) {
            route = "blanchfield";
          } else {
            throw PreconditionError("no family to build here: " + v.reason);
          }
        } else if (fm_p > 0) {
          cfg.p = fm_p;
        }
        FamilyCertificate cert = route == "nilpotent"
                                     ? build_family_nilpotent(cfg)
                                     : build_family_blanchfield(cfg);
        j["certificate"] = certificate_to_json(cert);
        if (!fm_eps.empty())
          j["ledger"] = ledger_to_json(rho_bookkeeping(cert, parse_eps(fm_eps)));
        emit(j, fm_out);
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  if (timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "elapsed: " << ms << " ms\n";
  }
  return 0;
}
