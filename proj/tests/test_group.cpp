#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "concordia/group.hpp"
#include "test_util.hpp"

using namespace concordia;

TEST_CASE("words reduce freely") {
  GroupWord w;
  w.push(1);
  w.push(2);
  w.push(-2);
  CHECK(w.letters == std::vector<int>{1});
  CHECK((w * w.inverse()).empty());
  GroupWord a{{1, 2}};
  CHECK(a.pow(2).letters == std::vector<int>{1, 2, 1, 2});
  CHECK(a.pow(-1).letters == std::vector<int>{-2, -1});
  CHECK(a.pow(0).empty());
  CHECK(a.str() == "g1 g2");
  CHECK(a.pow(-1).str() == "g2^-1 g1^-1");
  CHECK(GroupWord{}.str() == "1");
}

TEST_CASE("trefoil arcs merge across over-passages") {
  auto d = testutil::load_corpus("trefoil_rh");
  auto w = wirtinger(d);
  CHECK(w.num_arcs == 3);
  CHECK(w.relations.size() == 3);
  // edges riding the same over-strand share an arc
  CHECK(w.arc_of_edge.at(1) == w.arc_of_edge.at(6));
  CHECK(w.arc_of_edge.at(2) == w.arc_of_edge.at(3));
  CHECK(w.arc_of_edge.at(4) == w.arc_of_edge.at(5));
  for (int c : w.arc_component) CHECK(c == 0);
  for (auto& r : w.relations) {
    CHECK(r.sign == 1);
    CHECK(r.in_arc != r.out_arc);
    // each relator abelianizes to nothing
    auto sums = abelianize(relator_word(r), w);
    CHECK(sums[0] == 0);
  }
}

TEST_CASE("hopf wirtinger data") {
  auto d = testutil::load_corpus("hopf_pos");
  auto w = wirtinger(d);
  CHECK(w.num_arcs == 2);
  CHECK(w.arc_of_edge.at(1) == w.arc_of_edge.at(2));
  CHECK(w.arc_of_edge.at(3) == w.arc_of_edge.at(4));
  CHECK(w.arc_component == std::vector<int>{0, 1});
  CHECK(w.base_arc.size() == 2);
}

TEST_CASE("crossing-free components contribute a free generator") {
  auto d = parse_pd("PD[] Components[[1],[2]]");
  auto w = wirtinger(d);
  CHECK(w.num_arcs == 2);
  CHECK(w.relations.empty());
  auto l = longitude_word(d, w, 0);
  CHECK(l.empty());
}

TEST_CASE("zero-framed longitudes abelianize to the linking row") {
  for (auto name : {"hopf_pos", "trefoil_rh", "chain4"}) {
    auto d = testutil::load_corpus(name);
    auto w = wirtinger(d);
    auto lm = linking_matrix(d);
    for (int c = 0; c < d.num_components(); ++c) {
      auto sums = abelianize(longitude_word(d, w, c), w);
      for (int j = 0; j < d.num_components(); ++j)
        CHECK(sums[j] == lm.lk(c, j));
    }
  }
  auto bor = testutil::make_borromean();
  auto w = wirtinger(bor);
  for (int c = 0; c < 3; ++c) {
    auto sums = abelianize(longitude_word(bor, w, c), w);
    for (auto& s : sums) CHECK(s == 0);
    // longitudes of this link are nontrivial commutator words
    CHECK(!longitude_word(bor, w, c).empty());
  }
}

TEST_CASE("trefoil longitude word") {
  auto d = testutil::load_corpus("trefoil_rh");
  auto w = wirtinger(d);
  auto l = longitude_word(d, w, 0);
  // three over-arc letters then the framing correction by the base meridian
  CHECK(l.letters.size() == 6);
  auto sums = abelianize(l, w);
  CHECK(sums[0] == 0);
}
