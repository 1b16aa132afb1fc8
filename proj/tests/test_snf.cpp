#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "concordia/snf.hpp"
#include "test_util.hpp"

using namespace concordia;

namespace {

// k-th determinant divisor: gcd of all k x k minors
Int det_divisor(const IntMatrix& a, int k) {
  int rows = a.size(), cols = rows ? a[0].size() : 0;
  if (k == 0) return 1;
  if (k > rows || k > cols) return 0;
  std::vector<int> rs(k), cs(k);
  Int g = 0;
  std::function<Int(const std::vector<int>&, const std::vector<int>&)> det =
      [&](const std::vector<int>& r, const std::vector<int>& c) -> Int {
    if (r.size() == 1) return a[r[0]][c[0]];
    Int acc = 0;
    for (size_t j = 0; j < c.size(); ++j) {
      std::vector<int> rr(r.begin() + 1, r.end());
      std::vector<int> cc;
      for (size_t t = 0; t < c.size(); ++t)
        if (t != j) cc.push_back(c[t]);
      Int term = a[r[0]][c[j]] * det(rr, cc);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  };
  std::function<void(int, int)> pick_cols;
  std::function<void(int, int)> pick_rows = [&](int start, int depth) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (int v = start; v <= rows - (k - depth); ++v) {
      rs[depth] = v;
      pick_rows(v + 1, depth + 1);
    }
  };
  pick_cols = [&](int start, int depth) {
    if (depth == k) {
      g = int_gcd(g, det(rs, cs));
      return;
    }
    for (int v = start; v <= cols - (k - depth); ++v) {
      cs[depth] = v;
      pick_cols(v + 1, depth + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

}  // namespace

TEST_CASE("smith diagonal matches determinant divisors") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dim(1, 4), val(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMatrix a(r, std::vector<Int>(c));
    for (auto& row : a)
      for (auto& v : row) v = val(rng);
    auto diag = smith_diagonal(a);
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      CHECK(diag[i + 1] % diag[i] == 0);
    Int prev = 1;
    for (size_t k = 1; k <= diag.size(); ++k) {
      Int gk = det_divisor(a, k);
      REQUIRE(prev != 0);
      CHECK(diag[k - 1] == gk / prev);
      prev = gk;
    }
    CHECK(det_divisor(a, diag.size() + 1) == 0);
  }
}

TEST_CASE("cokernel basics") {
  CHECK(cokernel({{1, 0}, {0, 1}}, 2).trivial());
  auto z2 = cokernel(IntMatrix{}, 2);
  CHECK(z2.rank == 2);
  CHECK(z2.torsion.empty());
  auto g = cokernel({{2, 0}, {0, 3}}, 2);
  CHECK(g.rank == 0);
  REQUIRE(g.torsion.size() == 1);
  CHECK(g.torsion[0] == 6);  // invariant factors of diag(2,3) are 1, 6
  auto h = cokernel({{2, 0}, {0, 4}}, 2);
  REQUIRE(h.torsion.size() == 2);
  CHECK(h.torsion[0] == 2);
  CHECK(h.torsion[1] == 4);
  CHECK(cokernel({{0, 0}}, 2).rank == 2);
}

TEST_CASE("structure strings") {
  CHECK(AbelianGroup{}.str() == "0");
  CHECK(AbelianGroup{1, {}}.str() == "Z");
  CHECK(AbelianGroup{2, {Int(3)}}.str() == "Z^2 + Z/3");
  CHECK(AbelianGroup{0, {Int(2), Int(4)}}.str() == "Z/2 + Z/4");
}

TEST_CASE("two-component quotient is cyclic of order lk") {
  for (int n = -10; n <= 10; ++n) {
    LinkingMatrix lm;
    lm.m = 2;
    lm.l = {{Int(0), Int(n)}, {Int(n), Int(0)}};
    auto g = lcs2_quotient(lm);
    CHECK(g.rank == (n == 0 ? 1 : 0));
    if (n == 1 || n == -1) {
      CHECK(g.trivial());
    } else if (n != 0) {
      REQUIRE(g.torsion.size() == 1);
      CHECK(g.torsion[0] == (n < 0 ? -n : n));
    }
  }
}

TEST_CASE("quotients of the corpus links") {
  auto bor = lcs2_quotient(linking_matrix(testutil::make_borromean()));
  CHECK(bor.rank == 3);
  CHECK(bor.torsion.empty());
  auto wh = lcs2_quotient(linking_matrix(testutil::make_whitehead()));
  CHECK(wh.rank == 1);
  auto hopf = lcs2_quotient(linking_matrix(testutil::load_corpus("hopf_pos")));
  CHECK(hopf.trivial());
  auto t26 = lcs2_quotient(linking_matrix(testutil::make_torus26()));
  REQUIRE(t26.torsion.size() == 1);
  CHECK(t26.torsion[0] == 3);
  auto chain = lcs2_quotient(linking_matrix(testutil::load_corpus("chain4")));
  // six commutator generators, four longitude relations, banded linking
  CHECK(!chain.trivial());
}

TEST_CASE("rank lower bound across random linking matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dm(2, 5), dv(-6, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = dm(rng);
    LinkingMatrix lm;
    lm.m = m;
    lm.l.assign(m, std::vector<Int>(m, Int(0)));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) lm.l[i][j] = lm.l[j][i] = dv(rng);
    auto g = lcs2_quotient(lm);
    CHECK(g.rank >= (m - 1) * (m - 2) / 2);
  }
}
