#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "concordia/braid.hpp"
#include "concordia/pd.hpp"
#include "test_util.hpp"

using namespace concordia;

TEST_CASE("unknot and unlinks parse") {
  auto d = parse_pd("PD[] Components[[1]]");
  CHECK(d.num_components() == 1);
  CHECK(d.num_crossings() == 0);
  CHECK(d.writhe() == 0);
  auto u3 = parse_pd("PD[] Components[[1],[2],[3]]");
  CHECK(u3.num_components() == 3);
  auto lm = linking_matrix(u3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(lm.lk(i, j) == 0);
}

TEST_CASE("positive Hopf link resolves to two positive crossings") {
  auto d = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]] Components[[1,2],[3,4]]");
  CHECK(d.num_components() == 2);
  REQUIRE(d.num_crossings() == 2);
  CHECK(d.crossings[0].sign == 1);
  CHECK(d.crossings[1].sign == 1);
  CHECK(d.writhe() == 2);
  CHECK(d.self_writhe(0) == 0);
  CHECK(d.self_writhe(1) == 0);
  CHECK(linking_matrix(d).lk(0, 1) == 1);
}

TEST_CASE("negative Hopf link needs the edge-direction constraints") {
  auto d = parse_pd("PD[X[1,4,2,3], X[3,2,4,1]] Components[[1,2],[3,4]]");
  CHECK(d.crossings[0].sign == -1);
  CHECK(d.crossings[1].sign == -1);
  CHECK(linking_matrix(d).lk(0, 1) == -1);
}

TEST_CASE("right trefoil: all positive, writhe 3") {
  auto d = parse_pd(
      "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]] Components[[1,2,3,4,5,6]]");
  CHECK(d.num_components() == 1);
  for (auto& c : d.crossings) CHECK(c.sign == 1);
  CHECK(d.writhe() == 3);
  CHECK(d.self_writhe(0) == 3);
}

TEST_CASE("four-link chain has the banded linking matrix") {
  auto d = testutil::load_corpus("chain4");
  REQUIRE(d.num_components() == 4);
  auto lm = linking_matrix(d);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Int want = (i != j && (i - j == 1 || j - i == 1)) ? 1 : 0;
      CHECK(lm.lk(i, j) == want);
    }
}

TEST_CASE("serialize then parse is the identity") {
  for (auto name : {"unknot", "hopf_pos", "trefoil_rh", "chain4", "unlink3"}) {
    auto d = testutil::load_corpus(name);
    auto d2 = parse_pd(d.serialize());
    CHECK(d2.serialize() == d.serialize());
    CHECK(d2.num_crossings() == d.num_crossings());
    CHECK(d2.writhe() == d.writhe());
  }
}

TEST_CASE("malformed diagrams are rejected") {
  CHECK_THROWS_AS(parse_pd("Components[[1]]"), ParseError);
  // edge appears once
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3,4]] Components[[1,2,3,4,5]]"),
                  ParseError);
  // over-strand cannot follow the component order
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,1,2]] Components[[1,2]]"), ParseError);
  // edge in two components
  CHECK_THROWS_AS(parse_pd("PD[] Components[[1],[1]]"), ParseError);
  // site with unknown edge
  CHECK_THROWS_AS(parse_pd("PD[] Components[[1]] Site[2^+]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[] Components[[1]] Inside[1]"), ParseError);
}

TEST_CASE("sites parse and survive serialization") {
  auto d = parse_pd("PD[] Components[[1]] Site[1^+, 1^-]");
  REQUIRE(d.sites.size() == 1);
  CHECK(d.sites[0].strands.size() == 2);
  CHECK(d.sites[0].strands[0] == std::make_pair(1, 1));
  CHECK(d.sites[0].strands[1] == std::make_pair(1, -1));
  auto d2 = parse_pd(d.serialize());
  CHECK(d2.sites.size() == 1);
  CHECK(d2.serialize() == d.serialize());
}

TEST_CASE("kink moves change writhe by one and stay valid") {
  auto tre = testutil::load_corpus("trefoil_rh");
  auto plus = reidemeister1(tre, 1, 1);
  CHECK(plus.num_crossings() == 4);
  CHECK(plus.writhe() == 4);
  auto minus = reidemeister1(tre, 4, -1);
  CHECK(minus.num_crossings() == 4);
  CHECK(minus.writhe() == 2);
  // kink on a crossing-free loop
  auto u = testutil::load_corpus("unknot");
  auto ku = reidemeister1(u, 1, 1);
  CHECK(ku.num_crossings() == 1);
  CHECK(ku.writhe() == 1);
  auto ku2 = reidemeister1(u, 1, -1);
  CHECK(ku2.writhe() == -1);
}

TEST_CASE("poke moves add cancelling crossings") {
  auto hopf = testutil::load_corpus("hopf_pos");
  auto poked = reidemeister2(hopf, 1, 3);
  CHECK(poked.num_crossings() == 4);
  CHECK(poked.writhe() == hopf.writhe());
  CHECK(linking_matrix(poked).lk(0, 1) == 1);
  auto tre = testutil::load_corpus("trefoil_rh");
  auto p2 = reidemeister2(tre, 1, 4);
  CHECK(p2.num_crossings() == 5);
  CHECK(p2.writhe() == 3);
}

TEST_CASE("component selection keeps sub-link structure") {
  auto d = testutil::load_corpus("chain4");
  auto ab = select_components(d, {0, 1});
  CHECK(ab.num_components() == 2);
  CHECK(ab.num_crossings() == 2);
  CHECK(linking_matrix(ab).lk(0, 1) == 1);
  auto ac = select_components(d, {0, 2});
  CHECK(ac.num_components() == 2);
  CHECK(ac.num_crossings() == 0);
  auto b = select_components(d, {1});
  CHECK(b.num_components() == 1);
  CHECK(b.num_crossings() == 0);
  auto whole = select_components(d, {0, 1, 2, 3});
  CHECK(whole.num_crossings() == 6);
}

TEST_CASE("braid closures produce the expected links") {
  auto hopf = testutil::make_hopf();
  CHECK(hopf.num_components() == 2);
  CHECK(linking_matrix(hopf).lk(0, 1) == 1);
  CHECK(hopf.writhe() == 2);

  auto tre = testutil::make_trefoil();
  CHECK(tre.num_components() == 1);
  CHECK(tre.writhe() == 3);
  CHECK(tre.num_crossings() == 3);

  auto fig8 = testutil::make_figure8();
  CHECK(fig8.num_components() == 1);
  CHECK(fig8.writhe() == 0);
  CHECK(fig8.num_crossings() == 4);

  auto bor = testutil::make_borromean();
  REQUIRE(bor.num_components() == 3);
  auto lm = linking_matrix(bor);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(lm.lk(i, j) == 0);

  auto wh = testutil::make_whitehead();
  REQUIRE(wh.num_components() == 2);
  CHECK(linking_matrix(wh).lk(0, 1) == 0);
  CHECK(wh.num_crossings() == 5);

  auto t26 = testutil::make_torus26();
  REQUIRE(t26.num_components() == 2);
  CHECK(linking_matrix(t26).lk(0, 1) == 3);

  auto unlink = testutil::from_braid("", 2);
  CHECK(unlink.num_components() == 2);
  CHECK(unlink.num_crossings() == 0);

  CHECK_THROWS_AS(parse_braid("0"), ParseError);
  CHECK_THROWS_AS(parse_braid("3", 2), ParseError);
}

TEST_CASE("braid relation closures agree on diagram-level invariants") {
  auto a = testutil::from_braid("1 2 1 1", 3);
  auto b = testutil::from_braid("2 1 2 1", 3);
  CHECK(a.num_components() == b.num_components());
  CHECK(a.writhe() == b.writhe());
}
