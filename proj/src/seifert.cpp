#include "concordia/seifert.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "concordia/laurent.hpp"

namespace concordia {

namespace {

LaurentPoly entry_poly(const Int& vij, const Int& vji) {
  // vij - x*vji
  LaurentPoly p = LaurentPoly::constant(1, vij);
  LaurentPoly xterm = LaurentPoly::monomial(1, {1}, vji);
  return p - xterm;
}

IntPoly laurent_to_intpoly(const LaurentPoly& p) {
  std::vector<Int> c;
  for (const auto& [e, v] : p.terms()) {
    int k = e[0];
    if (k < 0) throw InternalError("negative exponent in characteristic polynomial");
    if (k >= static_cast<int>(c.size())) c.resize(k + 1, Int(0));
    c[k] = v;
  }
  return IntPoly::from(std::move(c));
}

} // namespace

std::string SeifertMatrix::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < size(); ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < size(); ++j) out << (j ? "," : "") << v[i][j].str();
    out << "]";
  }
  out << "]";
  return out.str();
}

void validate_seifert(const SeifertMatrix& m) {
  for (const auto& row : m.v)
    if (static_cast<int>(row.size()) != m.size())
      throw PreconditionError("seifert matrix must be square");
  int n = m.size();
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n, LaurentPoly(1)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = LaurentPoly::constant(1, m.v[i][j] - m.v[j][i]);
  LaurentPoly det = laurent_det(a, 1);
  if (!(det == LaurentPoly::constant(1, Int(1))))
    throw PreconditionError("seifert matrix needs det(V - V^T) = 1");
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  int n = a.size(), m = b.size();
  SeifertMatrix r;
  r.v.assign(n + m, std::vector<Int>(n + m, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.v[i][j] = a.v[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.v[n + i][n + j] = b.v[i][j];
  return r;
}

SeifertMatrix seifert_from_name(const std::string& name) {
  SeifertMatrix acc;
  size_t pos = 0;
  bool any = false;
  while (pos <= name.size()) {
    size_t hash = name.find('#', pos);
    std::string atom = name.substr(pos, hash == std::string::npos ? std::string::npos : hash - pos);
    SeifertMatrix part;
    if (atom == "unknot") {
    } else if (atom == "trefoil_rh") {
      part.v = {{Int(-1), Int(1)}, {Int(0), Int(-1)}};
    } else if (atom == "trefoil_lh") {
      part.v = {{Int(1), Int(-1)}, {Int(0), Int(1)}};
    } else if (atom == "figure8") {
      part.v = {{Int(1), Int(1)}, {Int(0), Int(-1)}};
    } else {
      throw PreconditionError("unknown builtin seifert matrix: " + atom);
    }
    acc = any ? connected_sum(acc, part) : part;
    any = true;
    if (hash == std::string::npos) break;
    pos = hash + 1;
  }
  if (!any) throw PreconditionError("empty seifert matrix name");
  validate_seifert(acc);
  return acc;
}

SeifertMatrix parse_seifert(const std::string& text) {
  size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw ParseError("empty seifert matrix input");
  SeifertMatrix m;
  if (text[start] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw ParseError("bad seifert matrix JSON");
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("seifert matrix rows must be arrays");
      std::vector<Int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw ParseError("seifert entries must be integers");
        r.emplace_back(x.get<long long>());
      }
      m.v.push_back(std::move(r));
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::vector<Int> r;
      std::string tok;
      while (row >> tok) {
        try {
          r.emplace_back(tok);
        } catch (const std::exception&) {
          throw ParseError("bad seifert matrix entry: " + tok);
        }
      }
      if (!r.empty()) m.v.push_back(std::move(r));
    }
  }
  validate_seifert(m);
  return m;
}

IntPoly seifert_alexander(const SeifertMatrix& m) {
  int n = m.size();
  if (n == 0) return IntPoly::from({Int(1)});
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n, LaurentPoly(1)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = entry_poly(m.v[i][j], m.v[j][i]);
  return laurent_to_intpoly(laurent_det(a, 1));
}

int arf(const SeifertMatrix& m) {
  IntPoly delta = seifert_alexander(m);
  Int d = delta.eval_int(Int(-1));
  if (d % 2 == 0) throw InternalError("knot determinant should be odd");
  Int r = d % 8;
  if (r < 0) r += 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

} // namespace concordia
