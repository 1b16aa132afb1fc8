#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "concordia/alexander.hpp"
#include "concordia/magnus.hpp"
#include "test_util.hpp"

using namespace concordia;

namespace {

// independent check expander: sparse series on words of variable indices,
// truncated at degree 3, driven to a fixed point by sweeping the relations
// instead of walking the strands
using Word = std::vector<int>;
using Sparse = std::map<Word, Int>;

Sparse sp_one() { return {{Word{}, Int(1)}}; }

Sparse sp_mul(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (auto& [wa, ca] : a)
    for (auto& [wb, cb] : b) {
      if (wa.size() + wb.size() > 3) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r[w] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

Sparse sp_inv(const Sparse& a) {
  Sparse u = a;
  u[Word{}] -= 1;
  if (u[{}] != 0) throw std::runtime_error("unit constant expected");
  Sparse r = sp_one(), p = sp_one();
  for (int k = 1; k <= 3; ++k) {
    p = sp_mul(p, u);
    for (auto& [w, c] : p) r[w] += (k % 2 ? -c : c);
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

Int oracle_mu(const LinkDiagram& d, const std::vector<int>& idx) {
  auto w = wirtinger(d);
  int m = d.num_components();
  std::vector<Sparse> img(w.num_arcs);
  for (int a = 0; a < w.num_arcs; ++a) {
    img[a] = sp_one();
    img[a][{w.arc_component[a]}] = 1;
  }
  std::vector<bool> is_base(w.num_arcs + 1, false);
  for (int b : w.base_arc) is_base[b] = true;
  for (int round = 0; round < 6; ++round)
    for (auto& rel : w.relations) {
      if (is_base[rel.out_arc]) continue;
      Sparse c = img[rel.over_arc - 1];
      if (rel.sign < 0) c = sp_inv(c);
      img[rel.out_arc - 1] =
          sp_mul(sp_mul(c, img[rel.in_arc - 1]),
                 rel.sign < 0 ? img[rel.over_arc - 1] : sp_inv(img[rel.over_arc - 1]));
    }
  auto l = longitude_word(d, w, idx.back() - 1);
  Sparse s = sp_one();
  for (int letter : l.letters) {
    const Sparse& a = img[std::abs(letter) - 1];
    s = sp_mul(s, letter > 0 ? a : sp_inv(a));
  }
  Word key;
  for (size_t k = 0; k + 1 < idx.size(); ++k) key.push_back(idx[k] - 1);
  auto it = s.find(key);
  return it == s.end() ? Int(0) : it->second;
}

}  // namespace

TEST_CASE("length-two invariants are linking numbers") {
  for (auto name : {"hopf_pos", "trefoil_rh", "chain4", "unlink2"}) {
    auto d = testutil::load_corpus(name);
    auto lm = linking_matrix(d);
    for (int i = 1; i <= d.num_components(); ++i)
      for (int j = 1; j <= d.num_components(); ++j) {
        if (i == j) continue;
        auto v = milnor_mu(d, {i, j});
        CHECK(v.indeterminacy == 0);
        CHECK(v.value == lm.lk(i - 1, j - 1));
      }
  }
  auto wh = testutil::make_whitehead();
  CHECK(milnor_mu(wh, {1, 2}).value == 0);
  CHECK(milnor_mu(wh, {2, 1}).value == 0);
}

TEST_CASE("borromean rings have triple invariant of magnitude one") {
  auto d = testutil::make_borromean();
  auto v = milnor_mu(d, {1, 2, 3});
  CHECK(v.indeterminacy == 0);
  CHECK((v.raw == 1 || v.raw == -1));
  CHECK(v.raw == oracle_mu(d, {1, 2, 3}));
  // antisymmetry in the first two slots for vanishing linking numbers
  auto v21 = milnor_mu(d, {2, 1, 3});
  CHECK(v21.raw == -v.raw);
  // every permutation has magnitude one
  for (auto idx : std::vector<std::vector<int>>{
           {1, 2, 3}, {1, 3, 2}, {2, 3, 1}, {2, 1, 3}, {3, 1, 2}, {3, 2, 1}}) {
    auto u = milnor_mu(d, idx);
    CHECK((u.raw == 1 || u.raw == -1));
    CHECK(u.raw == oracle_mu(d, idx));
  }
}

TEST_CASE("split links have vanishing invariants") {
  auto d = testutil::load_corpus("unlink3");
  for (auto idx : std::vector<std::vector<int>>{{1, 2}, {1, 2, 3}, {2, 3, 1}}) {
    auto v = milnor_mu(d, idx);
    CHECK(v.raw == 0);
    CHECK(v.indeterminacy == 0);
  }
}

TEST_CASE("chain triple invariants reduce by their indeterminacy") {
  auto d = testutil::load_corpus("chain4");
  auto v = milnor_mu(d, {1, 2, 3});
  // adjacent linking numbers are 1, so everything collapses mod 1
  CHECK(v.indeterminacy == 1);
  CHECK(v.value == 0);
  auto u = milnor_mu(d, {1, 3, 4});
  CHECK(u.indeterminacy == 1);
}

TEST_CASE("whitehead triple invariants against the expander") {
  auto d = testutil::make_whitehead();
  for (auto idx :
       std::vector<std::vector<int>>{{1, 2, 2}, {1, 1, 2}, {2, 1, 1}}) {
    auto v = milnor_mu(d, idx);
    CHECK(v.raw == oracle_mu(d, idx));
  }
}

TEST_CASE("unsupported lengths are rejected") {
  auto d = testutil::load_corpus("hopf_pos");
  CHECK_THROWS_AS(milnor_mu(d, {1}), PreconditionError);
  CHECK_THROWS_AS(milnor_mu(d, {1, 2, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(milnor_mu(d, {1, 3}), PreconditionError);
}
