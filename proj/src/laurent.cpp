#include "concordia/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace concordia {

LaurentPoly LaurentPoly::constant(int nvars, Int c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_[Exps(nvars, 0)] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exps& e, Int c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int k) {
  Exps e(nvars, 0);
  e.at(k) = 1;
  return monomial(nvars, e);
}

void LaurentPoly::add_term(const Exps& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(nvars_);
  Exps e(nvars_);
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::mul_scalar(const Int& c) const {
  LaurentPoly r(nvars_);
  if (c == 0) return r;
  for (auto& [e, t] : terms_) r.terms_[e] = t * c;
  return r;
}

LaurentPoly LaurentPoly::mul_monomial(const Exps& e, const Int& c) const {
  LaurentPoly r(nvars_);
  if (c == 0) return r;
  Exps f(nvars_);
  for (auto& [ea, ca] : terms_) {
    for (int i = 0; i < nvars_; ++i) f[i] = ea[i] + e[i];
    r.terms_[f] = ca * c;
  }
  return r;
}

LaurentPoly LaurentPoly::specialize_one(int k) const {
  LaurentPoly r(nvars_ - 1);
  Exps e(nvars_ - 1);
  for (auto& [ea, ca] : terms_) {
    int j = 0;
    for (int i = 0; i < nvars_; ++i)
      if (i != k) e[j++] = ea[i];
    r.add_term(e, ca);
  }
  return r;
}

Int LaurentPoly::eval_all_ones() const {
  Int s = 0;
  for (auto& [e, c] : terms_) s += c;
  return s;
}

Int LaurentPoly::eval_at_pm_one(const std::vector<int>& signs) const {
  Int s = 0;
  for (auto& [e, c] : terms_) {
    int neg = 0;
    for (int i = 0; i < nvars_; ++i)
      if (signs[i] < 0 && (e[i] % 2 != 0)) neg ^= 1;
    s += neg ? -c : c;
  }
  return s;
}

int LaurentPoly::min_exp(int k) const {
  bool first = true;
  int m = 0;
  for (auto& [e, c] : terms_) {
    if (first || e[k] < m) m = e[k];
    first = false;
  }
  return m;
}

int LaurentPoly::max_exp(int k) const {
  bool first = true;
  int m = 0;
  for (auto& [e, c] : terms_) {
    if (first || e[k] > m) m = e[k];
    first = false;
  }
  return m;
}

LaurentPoly LaurentPoly::normalized() const {
  if (terms_.empty()) return *this;
  Exps shift(nvars_);
  for (int k = 0; k < nvars_; ++k) shift[k] = -min_exp(k);
  LaurentPoly r = mul_monomial(shift);
  if (r.terms_.begin()->second < 0) r = -r;
  return r;
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

bool LaurentPoly::is_one_normalized() const {
  LaurentPoly n = normalized();
  return n.terms_.size() == 1 && n.terms_.begin()->second == 1 &&
         n.terms_.begin()->first == Exps(nvars_, 0);
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly(nvars_);
  // work on the polynomial representatives; monomial units cancel at the end
  Exps sa(nvars_), sd(nvars_);
  for (int k = 0; k < nvars_; ++k) {
    sa[k] = -min_exp(k);
    sd[k] = -d.min_exp(k);
  }
  LaurentPoly r = mul_monomial(sa);
  LaurentPoly dv = d.mul_monomial(sd);
  LaurentPoly q(nvars_);
  auto& dlead = *dv.terms_.rbegin();  // largest exponent vector (lex)
  Exps diff(nvars_);
  while (!r.is_zero()) {
    auto& rlead = *r.terms_.rbegin();
    bool ok = true;
    for (int i = 0; i < nvars_; ++i) {
      diff[i] = rlead.first[i] - dlead.first[i];
      if (diff[i] < 0) ok = false;
    }
    if (!ok || rlead.second % dlead.second != 0) return std::nullopt;
    Int c = rlead.second / dlead.second;
    q.add_term(diff, c);
    r -= dv.mul_monomial(diff, c);
  }
  // undo the shifts: this/(d) = q * x^(sd - sa)
  Exps undo(nvars_);
  for (int k = 0; k < nvars_; ++k) undo[k] = sd[k] - sa[k];
  return q.mul_monomial(undo);
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (auto& [e, c] : terms_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << "*";
      out << vars;
    }
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, int nvars) {
  LaurentPoly p(nvars);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && isspace((unsigned char)text[i])) ++i;
  };
  skip();
  if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 >= text.size())
    return p;
  bool first = true;
  while (i < text.size()) {
    skip();
    int sgn = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sgn = -1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected +/- in polynomial at offset " +
                       std::to_string(i));
    }
    first = false;
    Int coef = 1;
    bool saw_num = false, saw_var = false;
    if (i < text.size() && isdigit((unsigned char)text[i])) {
      size_t j = i;
      while (j < text.size() && isdigit((unsigned char)text[j])) ++j;
      coef = Int(text.substr(i, j - i));
      i = j;
      saw_num = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    Exps e(nvars, 0);
    while (i < text.size() && text[i] == 'x') {
      ++i;
      size_t j = i;
      while (j < text.size() && isdigit((unsigned char)text[j])) ++j;
      if (j == i) throw ParseError("bad variable in polynomial");
      int vi = std::stoi(text.substr(i, j - i));
      if (vi < 1 || vi > nvars)
        throw ParseError("variable index out of range: x" + std::to_string(vi));
      i = j;
      int ex = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t k = i;
        if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
        while (k < text.size() && isdigit((unsigned char)text[k])) ++k;
        ex = std::stoi(text.substr(i, k - i));
        i = k;
      }
      e[vi - 1] += ex;
      saw_var = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    if (!saw_num && !saw_var)
      throw ParseError("empty term in polynomial at offset " +
                       std::to_string(i));
    p.add_term(e, sgn * coef);
    skip();
  }
  return p;
}

namespace {

// univariate view in the last variable: exponent -> coefficient in m-1 vars
std::map<int, LaurentPoly> to_univar(const LaurentPoly& p) {
  int m = p.nvars();
  std::map<int, LaurentPoly> out;
  for (auto& [e, c] : p.terms()) {
    LaurentPoly::Exps rest(e.begin(), e.end() - 1);
    auto it = out.find(e[m - 1]);
    if (it == out.end()) {
      LaurentPoly q(m - 1);
      q.add_term(rest, c);
      out.emplace(e[m - 1], std::move(q));
    } else {
      it->second.add_term(rest, c);
    }
  }
  return out;
}

LaurentPoly from_univar(const std::map<int, LaurentPoly>& u, int m) {
  LaurentPoly p(m);
  for (auto& [d, coef] : u)
    for (auto& [e, c] : coef.terms()) {
      LaurentPoly::Exps full(e);
      full.push_back(d);
      p.add_term(full, c);
    }
  return p;
}

int univar_deg(const std::map<int, LaurentPoly>& u) {
  return u.empty() ? -1 : u.rbegin()->first;
}

// multivariate content of p viewed in the last variable
LaurentPoly univar_content(const std::map<int, LaurentPoly>& u) {
  LaurentPoly g;
  bool first = true;
  for (auto& [d, coef] : u) {
    if (first) {
      g = coef.normalized();
      first = false;
    } else {
      g = laurent_gcd(g, coef);
    }
    if (g.is_one_normalized()) break;
  }
  return g;
}

// pseudo-remainder of a by b in the last variable
std::map<int, LaurentPoly> pseudo_rem(std::map<int, LaurentPoly> a,
                                      const std::map<int, LaurentPoly>& b,
                                      int m) {
  int db = univar_deg(b);
  const LaurentPoly& lb = b.rbegin()->second;
  while (univar_deg(a) >= db) {
    int da = univar_deg(a);
    LaurentPoly la = a.rbegin()->second;
    // a := lb*a - la*x^(da-db)*b
    std::map<int, LaurentPoly> next;
    for (auto& [d, c] : a) {
      LaurentPoly v = c * lb;
      if (!v.is_zero()) next[d] = std::move(v);
    }
    for (auto& [d, c] : b) {
      int dd = d + da - db;
      LaurentPoly sub = c * la;
      auto it = next.find(dd);
      if (it == next.end()) {
        sub = -sub;
        if (!sub.is_zero()) next[dd] = std::move(sub);
      } else {
        it->second -= sub;
        if (it->second.is_zero()) next.erase(it);
      }
    }
    if (univar_deg(next) == da)
      throw InternalError("pseudo-division failed to reduce degree");
    a = std::move(next);
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  int m = a.nvars();
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (m == 0) {
    Int g = int_gcd(a.content(), b.content());
    return LaurentPoly::constant(0, g);
  }
  auto ua = to_univar(a.normalized());
  auto ub = to_univar(b.normalized());
  // integer/content layer
  LaurentPoly ca = univar_content(ua);
  LaurentPoly cb = univar_content(ub);
  LaurentPoly cg = laurent_gcd(ca, cb);
  // primitive parts
  auto divmap = [&](std::map<int, LaurentPoly>& u, const LaurentPoly& c) {
    for (auto& [d, coef] : u) {
      auto q = coef.divide_exact(c);
      if (!q) throw InternalError("content division failed");
      coef = *q;
    }
  };
  divmap(ua, ca);
  divmap(ub, cb);
  if (univar_deg(ua) < univar_deg(ub)) std::swap(ua, ub);
  // primitive PRS
  while (true) {
    if (ub.empty()) break;
    if (univar_deg(ub) == 0) {
      // nonzero constant in x_m: primitive => unit
      ub.clear();
      ua.clear();
      ua[0] = LaurentPoly::constant(m - 1, 1);
      break;
    }
    auto r = pseudo_rem(ua, ub, m);
    ua = std::move(ub);
    ub = std::move(r);
    if (!ub.empty()) {
      LaurentPoly c = univar_content(ub);
      divmap(ub, c);
    }
  }
  LaurentPoly pp = from_univar(ua, m);
  // reattach the content gcd (lift cg to m variables)
  LaurentPoly cg_m(m);
  for (auto& [e, c] : cg.terms()) {
    LaurentPoly::Exps full(e);
    full.push_back(0);
    cg_m.add_term(full, c);
  }
  return (pp * cg_m).normalized();
}

LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m, int nvars) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw PreconditionError("determinant needs a square matrix");
  if (n == 0) return LaurentPoly::constant(nvars, 1);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(nvars, 1);
  std::vector<size_t> rows(n), cols(n);
  for (size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  for (size_t step = 0; step < n; ++step) {
    // Markowitz-ish pivot: fewest-term nonzero entry, preferring sparse rows
    size_t pr = step, pc = step;
    size_t best = SIZE_MAX;
    for (size_t i = step; i < n; ++i)
      for (size_t j = step; j < n; ++j) {
        const LaurentPoly& e = m[rows[i]][cols[j]];
        if (e.is_zero()) continue;
        size_t score = e.term_count();
        if (score < best) {
          best = score;
          pr = i;
          pc = j;
          if (best == 1) goto found;
        }
      }
    if (best == SIZE_MAX) return LaurentPoly(nvars);  // singular
  found:
    if (pr != step) {
      std::swap(rows[pr], rows[step]);
      sign = -sign;
    }
    if (pc != step) {
      std::swap(cols[pc], cols[step]);
      sign = -sign;
    }
    const LaurentPoly& piv = m[rows[step]][cols[step]];
    for (size_t i = step + 1; i < n; ++i) {
      for (size_t j = step + 1; j < n; ++j) {
        LaurentPoly num = m[rows[i]][cols[j]] * piv -
                          m[rows[i]][cols[step]] * m[rows[step]][cols[j]];
        if (step == 0) {
          m[rows[i]][cols[j]] = std::move(num);
        } else {
          auto q = num.divide_exact(prev);
          if (!q) throw InternalError("Bareiss division not exact");
          m[rows[i]][cols[j]] = std::move(*q);
        }
      }
      m[rows[i]][cols[step]] = LaurentPoly(nvars);
    }
    prev = piv;
  }
  LaurentPoly det = m[rows[n - 1]][cols[n - 1]];
  return sign < 0 ? -det : det;
}

}  // namespace concordia
