#include "concordia/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace concordia {

namespace {

void trim_int(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void trim_rat(std::vector<Rat>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

IntPoly IntPoly::from(std::vector<Int> coeffs) {
  trim_int(coeffs);
  return IntPoly{std::move(coeffs)};
}

Int IntPoly::at(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return 0;
  return c[k];
}

Int IntPoly::lead() const {
  if (c.empty()) throw InternalError("lead of zero polynomial");
  return c.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return from(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return from(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return from(std::move(r));
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> r;
  for (size_t i = 1; i < c.size(); ++i) r.push_back(c[i] * Int(i));
  return from(std::move(r));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + Rat(c[i]);
  return acc;
}

Int IntPoly::eval_int(const Int& x) const {
  Int acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw InternalError("division by zero polynomial");
  if (is_zero()) return zero();
  if (deg() < d.deg()) return std::nullopt;
  std::vector<Int> rem = c;
  std::vector<Int> q(deg() - d.deg() + 1, Int(0));
  for (int k = deg() - d.deg(); k >= 0; --k) {
    Int top = rem[k + d.deg()];
    if (top == 0) continue;
    if (top % d.lead() != 0) return std::nullopt;
    Int f = top / d.lead();
    q[k] = f;
    for (int i = 0; i <= d.deg(); ++i) rem[k + i] -= f * d.c[i];
  }
  for (const Int& v : rem)
    if (v != 0) return std::nullopt;
  return from(std::move(q));
}

Int IntPoly::content() const {
  Int g(0);
  for (const Int& v : c) g = int_gcd(g, v);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return zero();
  Int g = content();
  std::vector<Int> r;
  r.reserve(c.size());
  for (const Int& v : c) r.push_back(v / g);
  return from(std::move(r));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = deg(); k >= 0; --k) {
    Int v = at(k);
    if (v == 0) continue;
    if (first) {
      if (v < 0) out << "-";
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    Int a = v < 0 ? Int(-v) : v;
    if (a != 1 || k == 0) out << a.str();
    if (k > 0) {
      if (a != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

RatPoly RatPoly::from(std::vector<Rat> coeffs) {
  trim_rat(coeffs);
  return RatPoly{std::move(coeffs)};
}

RatPoly RatPoly::from_int(const IntPoly& p) {
  std::vector<Rat> r;
  r.reserve(p.c.size());
  for (const Int& v : p.c) r.emplace_back(v);
  return from(std::move(r));
}

Rat RatPoly::lead() const {
  if (c.empty()) throw InternalError("lead of zero polynomial");
  return c.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return from(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return from(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly{};
  std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return from(std::move(r));
}

RatPoly RatPoly::scale(const Rat& s) const {
  std::vector<Rat> r = c;
  for (Rat& v : r) v *= s;
  return from(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw InternalError("division by zero polynomial");
  std::vector<Rat> rem = c;
  trim_rat(rem);
  if (static_cast<int>(rem.size()) - 1 < d.deg()) return {RatPoly{}, from(std::move(rem))};
  std::vector<Rat> q(rem.size() - d.c.size() + 1, Rat(0));
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Rat f = rem[k + d.deg()] / d.lead();
    if (f == 0) continue;
    q[k] = f;
    for (int i = 0; i <= d.deg(); ++i) rem[k + i] -= f * d.c[i];
  }
  return {from(std::move(q)), from(std::move(rem))};
}

int euler_phi(int n) {
  if (n <= 0) throw PreconditionError("euler_phi needs n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomic(int n) {
  if (n <= 0) throw PreconditionError("cyclotomic index must be positive");
  static std::map<int, IntPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by the product of lower cyclotomics over divisors
  std::vector<Int> xn(n + 1, Int(0));
  xn[0] = -1;
  xn[n] = 1;
  IntPoly num = IntPoly::from(std::move(xn));
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto q = num.divide_exact(cyclotomic(d));
    if (!q) throw InternalError("cyclotomic tower division failed");
    num = *q;
  }
  cache[n] = num;
  return num;
}

namespace {

RatPoly rat_gcd_monic(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scale(Rat(1) / a.lead());
  return a;
}

IntPoly to_primitive_int(const RatPoly& p) {
  Int den(1);
  for (const Rat& v : p.c) {
    Int d = boost::multiprecision::denominator(v);
    den = den / int_gcd(den, d) * d;
  }
  std::vector<Int> r;
  r.reserve(p.c.size());
  for (const Rat& v : p.c) {
    Rat scaled = v * Rat(den);
    r.push_back(boost::multiprecision::numerator(scaled));
  }
  return IntPoly::from(std::move(r)).primitive_part();
}

int sign_variations(const std::vector<Rat>& vals) {
  int count = 0;
  int prev = 0;
  for (const Rat& v : vals) {
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

std::vector<RatPoly> sturm_chain(const IntPoly& squarefree) {
  std::vector<RatPoly> chain;
  chain.push_back(RatPoly::from_int(squarefree));
  chain.push_back(RatPoly::from_int(squarefree.derivative()));
  while (!chain.back().is_zero()) {
    RatPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(r.scale(Rat(-1)));
  }
  chain.pop_back();
  return chain;
}

int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
  std::vector<Rat> vals;
  vals.reserve(chain.size());
  for (const RatPoly& p : chain) vals.push_back(p.eval(x));
  return sign_variations(vals);
}

} // namespace

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) return IntPoly::zero();
  if (p.deg() == 0) return IntPoly::from({Int(1)});
  RatPoly g = rat_gcd_monic(RatPoly::from_int(p), RatPoly::from_int(p.derivative()));
  if (g.deg() == 0) return p.primitive_part();
  RatPoly q = RatPoly::from_int(p).divmod(g).first;
  return to_primitive_int(q);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p, const Rat& lo, const Rat& hi) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.is_zero()) throw PreconditionError("cannot isolate roots of the zero polynomial");
  IntPoly sq = squarefree_part(p);
  if (sq.deg() <= 0) return out;
  if (sq.eval(lo) == 0 || sq.eval(hi) == 0)
    throw PreconditionError("isolation endpoints must not be roots");
  std::vector<RatPoly> chain = sturm_chain(sq);

  struct Seg {
    Rat a, b;
    int va, vb;
  };
  std::vector<Seg> work;
  work.push_back({lo, hi, variations_at(chain, lo), variations_at(chain, hi)});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    int roots = s.va - s.vb;
    if (roots <= 0) continue;
    if (roots == 1) {
      out.emplace_back(s.a, s.b);
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    Rat delta = (s.b - s.a) / 3;
    while (sq.eval(mid) == 0) {
      delta /= 2;
      mid = (s.a + s.b) / 2 + delta;  // finitely many roots, so this exits
    }
    int vm = variations_at(chain, mid);
    work.push_back({s.a, mid, s.va, vm});
    work.push_back({mid, s.b, vm, s.vb});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

void refine_root(const IntPoly& squarefree, std::pair<Rat, Rat>& iv, const Rat& width) {
  if (iv.first == iv.second) return;
  int sa = sign_of(squarefree.eval(iv.first));
  if (sa == 0) throw PreconditionError("refine_root endpoint is a root");
  while (iv.second - iv.first > width) {
    Rat mid = (iv.first + iv.second) / 2;
    int sm = sign_of(squarefree.eval(mid));
    if (sm == 0) {
      iv.first = mid;
      iv.second = mid;
      return;
    }
    if (sm == sa)
      iv.first = mid;
    else
      iv.second = mid;
  }
}

IntPoly palindromic_to_chebyshev(const IntPoly& p, int g) {
  if (p.deg() > 2 * g) throw PreconditionError("degree exceeds declared palindromic span");
  for (int k = 0; k <= g; ++k)
    if (p.at(k) != p.at(2 * g - k)) throw InternalError("polynomial is not palindromic");
  // p_j(y) = x^j + x^{-j} under y = x + 1/x: p_0 = 2, p_1 = y
  IntPoly acc = IntPoly::from({p.at(g)});
  IntPoly pj_prev = IntPoly::from({Int(2)});
  IntPoly pj = IntPoly::from({Int(0), Int(1)});
  IntPoly y = pj;
  for (int j = 1; j <= g; ++j) {
    acc = acc + IntPoly::from({p.at(g + j)}) * pj;
    IntPoly next = y * pj - pj_prev;
    pj_prev = pj;
    pj = next;
  }
  return acc;
}

} // namespace concordia
