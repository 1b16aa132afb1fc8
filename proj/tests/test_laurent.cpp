#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "concordia/laurent.hpp"

using namespace concordia;

namespace {

LaurentPoly rand_poly(std::mt19937& rng, int nvars, int max_deg, int max_terms,
                      int coef_range, bool laurent = true) {
  std::uniform_int_distribution<int> dc(-coef_range, coef_range);
  std::uniform_int_distribution<int> de(laurent ? -max_deg : 0, max_deg);
  std::uniform_int_distribution<int> dt(1, max_terms);
  LaurentPoly p(nvars);
  int t = dt(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<int> e(nvars);
    for (auto& v : e) v = de(rng);
    Int c = dc(rng);
    if (c != 0) p.add_term(e, c);
  }
  return p;
}

// independent univariate gcd: monic Euclid over Q, then content restored
struct QPoly {
  std::vector<Rat> c;  // c[i] coeff of x^i
  int deg() const {
    for (int i = (int)c.size() - 1; i >= 0; --i)
      if (c[i] != 0) return i;
    return -1;
  }
  void trim() { c.resize(deg() + 1); }
};

QPoly to_qpoly(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  int lo = p.min_exp(0);
  QPoly q;
  for (auto& [e, co] : p.terms()) {
    int k = e[0] - lo;
    if ((int)q.c.size() <= k) q.c.resize(k + 1, Rat(0));
    q.c[k] = Rat(co);
  }
  return q;
}

QPoly qmod(QPoly a, const QPoly& b) {
  while (a.deg() >= b.deg() && a.deg() >= 0 && b.deg() >= 0) {
    Rat f = a.c[a.deg()] / b.c[b.deg()];
    int shift = a.deg() - b.deg();
    for (int i = 0; i <= b.deg(); ++i) a.c[i + shift] -= f * b.c[i];
    a.trim();
  }
  return a;
}

LaurentPoly oracle_gcd_1var(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  QPoly x = to_qpoly(a), y = to_qpoly(b);
  while (y.deg() >= 0) {
    QPoly r = qmod(x, y);
    x = y;
    y = r;
  }
  // clear denominators, reduce to primitive integer form
  Int den = 1;
  for (auto& v : x.c) den = den / int_gcd(den, denominator(v)) * denominator(v);
  std::vector<Int> ic;
  for (auto& v : x.c) ic.push_back(numerator(v) * (den / denominator(v)));
  Int cont = 0;
  for (auto& v : ic) cont = int_gcd(cont, v);
  LaurentPoly prim(1);
  for (size_t i = 0; i < ic.size(); ++i)
    if (ic[i] != 0) prim.add_term({(int)i}, ic[i] / cont);
  Int cc = int_gcd(a.content(), b.content());
  return prim.mul_scalar(cc).normalized();
}

LaurentPoly oracle_det(const std::vector<std::vector<LaurentPoly>>& m, int nvars) {
  size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(nvars, 1);
  if (n == 1) return m[0][0];
  LaurentPoly acc(nvars);
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<LaurentPoly>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    LaurentPoly c = m[0][j] * oracle_det(sub, nvars);
    acc = (j % 2 == 0) ? acc + c : acc - c;
  }
  return acc;
}

}  // namespace

TEST_CASE("parse and print round-trip") {
  auto p = LaurentPoly::parse("3*x1^2*x2^-1 + x2 - 1", 2);
  CHECK(p.term_count() == 3);
  CHECK(LaurentPoly::parse(p.str(), 2) == p);
  CHECK(LaurentPoly::parse("0", 2).is_zero());
  CHECK(LaurentPoly::parse("x1", 1) == LaurentPoly::variable(1, 0));
  CHECK(LaurentPoly::parse("-x1^-3", 1) ==
        LaurentPoly::monomial(1, {-3}, -1));
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto q = rand_poly(rng, 3, 4, 6, 9);
    CHECK(LaurentPoly::parse(q.str(), 3) == q);
  }
}

TEST_CASE("ring identities on random values") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    auto a = rand_poly(rng, 2, 3, 4, 5);
    auto b = rand_poly(rng, 2, 3, 4, 5);
    auto c = rand_poly(rng, 2, 3, 4, 5);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (b - b) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("normalization fixes units") {
  auto p = LaurentPoly::parse("x1^2 - x1 + 1", 1);
  CHECK(p.normalized() == p);
  CHECK(p.mul_monomial({-5}).normalized() == p);
  CHECK(p.mul_scalar(-1).normalized() == p);
  CHECK((-p).mul_monomial({3}).normalized() == p);
  CHECK(LaurentPoly::monomial(2, {4, -2}, -1).is_unit());
  CHECK(LaurentPoly::monomial(2, {4, -2}, -1).normalized() ==
        LaurentPoly::constant(2, 1));
  CHECK(!LaurentPoly::parse("x1 + 1", 1).is_unit());
  CHECK(LaurentPoly::constant(1, 0).normalized().is_zero());
}

TEST_CASE("exact division") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    auto a = rand_poly(rng, 2, 2, 3, 4);
    auto b = rand_poly(rng, 2, 2, 3, 4);
    if (b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  auto bad = LaurentPoly::parse("x1 + 1", 1).divide_exact(
      LaurentPoly::parse("x1 - 1", 1));
  CHECK(!bad.has_value());
  CHECK(!LaurentPoly::parse("2", 1)
             .divide_exact(LaurentPoly::parse("3", 1))
             .has_value());
}

TEST_CASE("univariate gcd matches an independent Euclid oracle") {
  std::mt19937 rng(5);
  int nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = rand_poly(rng, 1, 2, 3, 2);
    auto u = rand_poly(rng, 1, 2, 3, 2);
    auto v = rand_poly(rng, 1, 2, 3, 2);
    auto a = g * u, b = g * v;
    auto mine = laurent_gcd(a, b);
    auto oracle = oracle_gcd_1var(a, b);
    CHECK(mine == oracle);
    if (!g.is_unit() && !g.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 50);
}

TEST_CASE("multivariate gcd recovers planted factors") {
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) {
    auto g = rand_poly(rng, 2, 2, 3, 2);
    auto u = rand_poly(rng, 2, 2, 2, 2);
    auto v = rand_poly(rng, 2, 2, 2, 2);
    if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
    auto a = g * u, b = g * v;
    auto mine = laurent_gcd(a, b);
    REQUIRE(!mine.is_zero());
    // divides both inputs and contains the planted factor
    CHECK(a.divide_exact(mine).has_value());
    CHECK(b.divide_exact(mine).has_value());
    CHECK(mine.divide_exact(g.normalized()).has_value());
    CHECK(laurent_gcd(a, b) == laurent_gcd(b, a));
  }
  // pinned small cases
  auto x = LaurentPoly::parse("x1*x2 - x1", 2);
  auto y = LaurentPoly::parse("x2^2 - 1", 2);
  CHECK(assoc_equal(laurent_gcd(x, y), LaurentPoly::parse("x2 - 1", 2)));
  CHECK(laurent_gcd(x, LaurentPoly::constant(2, 0)) == x.normalized());
}

TEST_CASE("determinants match cofactor expansion") {
  std::mt19937 rng(41);
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < 12; ++i) {
      std::vector<std::vector<LaurentPoly>> m(n,
                                              std::vector<LaurentPoly>(n));
      for (auto& row : m)
        for (auto& e : row) e = rand_poly(rng, 2, 1, 2, 3);
      CHECK(laurent_det(m, 2) == oracle_det(m, 2));
    }
  std::vector<std::vector<LaurentPoly>> sing(2, std::vector<LaurentPoly>(2));
  sing[0][0] = sing[1][0] = LaurentPoly::parse("x1", 1);
  sing[0][1] = sing[1][1] = LaurentPoly::parse("x1 + 1", 1);
  CHECK(laurent_det(sing, 1).is_zero());
}

TEST_CASE("evaluations and specialization") {
  auto p = LaurentPoly::parse("x1^2*x2 - 3*x1 + 2", 2);
  CHECK(p.eval_all_ones() == 0);
  auto q = p.specialize_one(1);  // x2 := 1
  CHECK(q == LaurentPoly::parse("x1^2 - 3*x1 + 2", 1));
  CHECK(p.specialize_one(0) == LaurentPoly::parse("x1 - 1", 1));
  auto r = LaurentPoly::parse("x1^-1 + x1", 1);
  CHECK(r.eval_at_pm_one({-1}) == -2);
  CHECK(r.eval_at_pm_one({1}) == 2);
}
