#include "concordia/signature.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "concordia/cyclotomic.hpp"
#include "concordia/embed.hpp"

namespace concordia {

namespace {

// a + b*i*sqrt(d) with fixed rational d > 0; closed under the arithmetic
// needed for Hermitian elimination at w = c + i*sqrt(1-c^2).
struct QuadNum {
  Rat a, b, d;

  bool is_zero() const { return a == 0 && b == 0; }
  QuadNum operator+(const QuadNum& o) const { return {a + o.a, b + o.b, d}; }
  QuadNum operator-(const QuadNum& o) const { return {a - o.a, b - o.b, d}; }
  QuadNum operator*(const QuadNum& o) const {
    return {a * o.a - b * o.b * d, a * o.b + b * o.a, d};
  }
  QuadNum inverse() const {
    Rat n = a * a + b * b * d;
    if (n == 0) throw InternalError("inverse of zero");
    return {a / n, -b / n, d};
  }
  QuadNum conj() const { return {a, -b, d}; }
  int real_sign() const {
    if (b != 0) throw InternalError("sign of a non-real value");
    return sign_of(a);
  }
};

// Symmetric elimination of a Hermitian matrix: split off nonsingular 1x1
// diagonal blocks (contributing their sign) or zero-diagonal 2x2 blocks
// (contributing 0), Schur-complementing the rest. Congruence preserves the
// signature throughout.
template <class F>
int hermitian_signature(std::vector<std::vector<F>>& h) {
  std::vector<int> act(h.size());
  std::iota(act.begin(), act.end(), 0);
  int sig = 0;
  while (!act.empty()) {
    int piv = -1;
    for (int i : act)
      if (!h[i][i].is_zero()) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      sig += h[piv][piv].real_sign();
      F inv = h[piv][piv].inverse();
      std::vector<int> rest;
      for (int i : act)
        if (i != piv) rest.push_back(i);
      for (int r : rest)
        for (int c : rest) h[r][c] = h[r][c] - h[r][piv] * inv * h[piv][c];
      act = std::move(rest);
      continue;
    }
    int bi = -1, bj = -1;
    for (size_t x = 0; x < act.size() && bi < 0; ++x)
      for (size_t y = x + 1; y < act.size(); ++y)
        if (!h[act[x]][act[y]].is_zero()) {
          bi = act[x];
          bj = act[y];
          break;
        }
    if (bi < 0) break;
    F ainv = h[bi][bj].inverse();
    F cinv = h[bj][bi].inverse();
    std::vector<int> rest;
    for (int i : act)
      if (i != bi && i != bj) rest.push_back(i);
    for (int r : rest)
      for (int c : rest)
        h[r][c] = h[r][c] - h[r][bi] * cinv * h[bj][c] - h[r][bj] * ainv * h[bi][c];
    act = std::move(rest);
  }
  return sig;
}

std::vector<std::vector<int>> split_blocks(const SeifertMatrix& v) {
  int n = v.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v.v[i][j] != 0 || v.v[j][i] != 0) parent[find(i)] = find(j);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, idx] : groups) out.push_back(std::move(idx));
  return out;
}

SeifertMatrix submatrix(const SeifertMatrix& v, const std::vector<int>& idx) {
  SeifertMatrix s;
  s.v.assign(idx.size(), std::vector<Int>(idx.size(), Int(0)));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) s.v[i][j] = v.v[idx[i]][idx[j]];
  return s;
}

template <class Fn>
int blockwise_signature(const SeifertMatrix& v, Fn per_block) {
  std::map<std::string, int> memo;
  int total = 0;
  for (const auto& idx : split_blocks(v)) {
    SeifertMatrix sub = submatrix(v, idx);
    std::string key = sub.str();
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, per_block(sub)).first;
    total += it->second;
  }
  return total;
}

// signature at w = c + i*sqrt(1 - c^2) for rational c in (-1, 1)
int sig_at_rational_cos(const SeifertMatrix& v, const Rat& c) {
  Rat d = 1 - c * c;
  if (d <= 0) throw InternalError("cosine sample outside (-1, 1)");
  return blockwise_signature(v, [&](const SeifertMatrix& sub) {
    int n = sub.size();
    QuadNum u{1 - c, Rat(-1), d};   // 1 - w
    QuadNum ub{1 - c, Rat(1), d};   // 1 - conj(w)
    std::vector<std::vector<QuadNum>> h(n, std::vector<QuadNum>(n, QuadNum{Rat(0), Rat(0), d}));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QuadNum vij{Rat(sub.v[i][j]), Rat(0), d};
        QuadNum vji{Rat(sub.v[j][i]), Rat(0), d};
        h[i][j] = u * vij + ub * vji;
      }
    return hermitian_signature(h);
  });
}

// signature at w = e^{2*pi*i*a/b} in reduced form, b >= 2
int sig_at_root_of_unity(const SeifertMatrix& v, int a, int b) {
  return blockwise_signature(v, [&](const SeifertMatrix& sub) {
    int n = sub.size();
    CycloNum one = CycloNum::rational(b, 1);
    CycloNum u = one - CycloNum::root_power(b, a);
    CycloNum ub = u.conj();
    std::vector<std::vector<CycloNum>> h(n, std::vector<CycloNum>(n, CycloNum(b)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        h[i][j] = u * CycloNum::rational(b, Rat(sub.v[i][j])) +
                  ub * CycloNum::rational(b, Rat(sub.v[j][i]));
      }
    return hermitian_signature(h);
  });
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

} // namespace

int lt_signature(const SeifertMatrix& v, int a, int b) {
  validate_seifert(v);
  if (b <= 0) throw PreconditionError("root-of-unity order must be positive");
  int am = ((a % b) + b) % b;
  if (am == 0) throw PreconditionError("signature at omega = 1 is excluded");
  int g = std::gcd(am, b);
  return sig_at_root_of_unity(v, am / g, b / g);
}

SignatureProfile signature_profile(const SeifertMatrix& v) {
  validate_seifert(v);
  SignatureProfile prof;
  prof.size = v.size();
  if (v.size() == 0) {
    prof.plateaus = {0};
    return prof;
  }

  IntPoly delta = seifert_alexander(v);
  if (delta.eval_int(Int(1)) != 1) throw InternalError("alexander polynomial not normalized at 1");
  int span = v.size();
  for (int k = 0; k <= span; ++k)
    if (delta.at(k) != delta.at(span - k)) throw InternalError("alexander polynomial not palindromic");

  // pull out x^e (vanishing constant terms come in palindromic pairs)
  int e = 0;
  while (delta.at(e) == 0) ++e;
  std::vector<Int> shifted(delta.c.begin() + e, delta.c.end());
  IntPoly core = IntPoly::from(std::move(shifted));
  if (core.deg() != span - 2 * e) throw InternalError("unexpected degree after shift");

  // rational-angle jumps: cyclotomic factors
  struct RJump {
    int n, k;
    Rat eps;
    std::pair<Rat, Rat> y;
  };
  std::vector<RJump> rational;
  int d0 = core.deg();
  int nmax = 2 * d0 * d0 + 4;
  for (int nc = 3; nc <= nmax; ++nc) {
    if (euler_phi(nc) > core.deg()) continue;
    IntPoly phi = cyclotomic(nc);
    bool divided = false;
    while (true) {
      auto q = core.divide_exact(phi);
      if (!q) break;
      core = *q;
      divided = true;
    }
    if (!divided) continue;
    for (int k = 1; 2 * k < nc; ++k) {
      if (std::gcd(k, nc) != 1) continue;
      RJump j{nc, k, Rat(1, 1024), {}};
      j.y = cos2_enclosure(j.k, j.n, j.eps);
      rational.push_back(j);
    }
  }

  // irrational jumps: real roots of the residual in y = x + 1/x
  if (core.deg() % 2 != 0) throw InternalError("residual degree should be even");
  IntPoly py = palindromic_to_chebyshev(core, core.deg() / 2);
  std::vector<std::pair<Rat, Rat>> sturm;
  IntPoly py_sq;
  if (py.deg() >= 1) {
    py_sq = squarefree_part(py);
    sturm = isolate_real_roots(py, Rat(-2), Rat(2));
  }

  // refine until all enclosures are pairwise disjoint and inside (-2, 2)
  for (int round = 0;; ++round) {
    if (round > 200) throw InternalError("jump separation did not converge");
    std::vector<std::pair<Rat, Rat>> enc;
    for (const RJump& j : rational) enc.push_back(j.y);
    for (const auto& iv : sturm) enc.push_back(iv);
    bool ok = true;
    std::vector<bool> shrink(enc.size(), false);
    for (size_t i = 0; i < enc.size(); ++i)
      if (enc[i].second >= 2 || enc[i].first <= -2) shrink[i] = true;
    for (size_t i = 0; i < enc.size(); ++i)
      for (size_t j = i + 1; j < enc.size(); ++j) {
        if (enc[i].second < enc[j].first || enc[j].second < enc[i].first) continue;
        shrink[i] = shrink[j] = true;
      }
    for (size_t i = 0; i < enc.size(); ++i)
      if (shrink[i]) ok = false;
    if (ok) break;
    for (size_t i = 0; i < rational.size(); ++i) {
      if (!shrink[i]) continue;
      rational[i].eps /= 16;
      rational[i].y = cos2_enclosure(rational[i].k, rational[i].n, rational[i].eps);
    }
    for (size_t i = 0; i < sturm.size(); ++i) {
      if (!shrink[rational.size() + i]) continue;
      Rat w = (sturm[i].second - sturm[i].first) / 16;
      if (w == 0) throw InternalError("exact roots collide");
      refine_root(py_sq, sturm[i], w);
    }
  }

  // tighten irrational roots so downstream angle enclosures converge fast
  for (auto& iv : sturm) refine_root(py_sq, iv, Rat(1, Int(1) << 60));

  // assemble jumps sorted by descending y (ascending theta)
  for (const RJump& j : rational) {
    ProfileJump pj;
    pj.rational_angle = true;
    pj.n = j.n;
    pj.k = j.k;
    pj.y_lo = j.y.first;
    pj.y_hi = j.y.second;
    pj.has_sigma_at = true;
    pj.sigma_at = sig_at_root_of_unity(v, j.k, j.n);
    prof.jumps.push_back(pj);
  }
  for (const auto& iv : sturm) {
    ProfileJump pj;
    pj.y_lo = iv.first;
    pj.y_hi = iv.second;
    prof.jumps.push_back(pj);
  }
  std::sort(prof.jumps.begin(), prof.jumps.end(),
            [](const ProfileJump& a, const ProfileJump& b) { return a.y_lo + a.y_hi > b.y_lo + b.y_hi; });

  size_t nj = prof.jumps.size();
  for (size_t i = 0; i <= nj; ++i) {
    Rat upper = i == 0 ? Rat(2) : prof.jumps[i - 1].y_lo;
    Rat lower = i == nj ? Rat(-2) : prof.jumps[i].y_hi;
    if (lower >= upper) throw InternalError("empty plateau gap");
    Rat sample = (upper + lower) / 2;
    int s = sig_at_rational_cos(v, sample / 2);
    if ((s % 2 + 2) % 2 != 0) throw InternalError("odd plateau signature");
    prof.plateaus.push_back(s);
  }
  return prof;
}

RhoValue rho_zp(const SeifertMatrix& v, int p, SigConvention conv) {
  if (!is_prime(p)) throw PreconditionError("rho average needs a prime order");
  validate_seifert(v);
  Int total(0);
  if (p == 2) {
    total = lt_signature(v, 1, 2);
  } else {
    for (int a = 1; 2 * a < p; ++a) total += Int(2) * sig_at_root_of_unity(v, a, p);
  }
  Rat value(total, Int(p));
  if (conv == SigConvention::Rho) value = -value;
  return RhoValue{true, value, Rat(0)};
}

RhoValue rho_integral(const SeifertMatrix& v, SigConvention conv) {
  SignatureProfile prof = signature_profile(v);
  bool exact = true;
  for (const ProfileJump& j : prof.jumps)
    if (!j.rational_angle) exact = false;

  // angle fractions t = theta/pi of each jump, as exact values or enclosures
  Rat eps = Rat(1, Int(1000000000000LL));
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<std::pair<Rat, Rat>> t;
    for (const ProfileJump& j : prof.jumps) {
      if (j.rational_angle) {
        Rat f(2 * j.k, j.n);
        t.emplace_back(f, f);
      } else {
        Rat lo = acos_fraction_enclosure(j.y_hi, eps).first;
        Rat hi = acos_fraction_enclosure(j.y_lo, eps).second;
        t.emplace_back(lo, hi);
      }
    }
    Rat lo_sum(0), hi_sum(0);
    bool sane = true;
    for (size_t i = 0; i < prof.plateaus.size(); ++i) {
      Rat seg_lo = (i == 0 ? Rat(0) : t[i - 1].second);
      Rat seg_hi_lo = (i == prof.plateaus.size() - 1 ? Rat(1) : t[i].first);
      Rat seg_hi_hi = (i == prof.plateaus.size() - 1 ? Rat(1) : t[i].second);
      Rat seg_lo_lo = (i == 0 ? Rat(0) : t[i - 1].first);
      // length interval: [t_next.lo - t_prev.hi, t_next.hi - t_prev.lo]
      Rat len_lo = seg_hi_lo - seg_lo;
      Rat len_hi = seg_hi_hi - seg_lo_lo;
      if (len_lo < 0) len_lo = 0;
      if (len_hi < len_lo) sane = false;
      int s = prof.plateaus[i];
      Rat a = Rat(s) * len_lo, b = Rat(s) * len_hi;
      lo_sum += s >= 0 ? a : b;
      hi_sum += s >= 0 ? b : a;
    }
    if (!sane) throw InternalError("inconsistent angle enclosures");
    Rat width = hi_sum - lo_sum;
    if (exact) {
      Rat value = lo_sum;
      if (conv == SigConvention::Rho) value = -value;
      return RhoValue{true, value, Rat(0)};
    }
    if (width < Rat(1, Int(1000000000))) {
      Rat value = (lo_sum + hi_sum) / 2;
      if (conv == SigConvention::Rho) value = -value;
      return RhoValue{false, value, width};
    }
    eps /= 1024;
  }
  throw InternalError("rho integral enclosure did not converge");
}

} // namespace concordia
