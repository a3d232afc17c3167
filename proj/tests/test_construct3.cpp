#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "hamcode/construct3.hpp"
#include "hamcode/graph.hpp"
#include "hamcode/verify.hpp"

using namespace hamcode;

namespace {

std::set<VertexId> word_set(const Code& c) {
  return std::set<VertexId>(c.words.begin(), c.words.end());
}

}  // namespace

TEST_SUITE("construct3") {

TEST_CASE("sextuple view flattens and splits consistently") {
  const SextupleView view(2, 3);
  CHECK(view.flatten({1, 1, 1, 1, 3, 1}) == Vertex{1, 5, 1});
  CHECK(view.flatten({2, 2, 2, 3, 1, 3}) == Vertex{6, 2, 6});

  // every vertex of K_6^3 splits and flattens back
  HammingGraph g(6, 3);
  g.for_each_vertex([&](VertexId v) {
    const Vertex t = g.vertex_at(v);
    CHECK(view.flatten(view.split(t)) == t);
  });

  const SextupleView other(3, 2);
  g.for_each_vertex([&](VertexId v) {
    const Vertex t = g.vertex_at(v);
    CHECK(other.flatten(other.split(t)) == t);
  });

  CHECK_THROWS_AS(view.flatten({0, 1, 1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(view.flatten({1, 1, 1, 4, 1, 1}), std::invalid_argument);
}

TEST_CASE("the two-times-three flattening example") {
  HammingGraph inner(2, 3), outer(3, 3);
  const Code c1 = Code::of(std::move(inner), {{1, 1, 1}, {2, 2, 2}});
  const Code c2 = Code::of(std::move(outer), {{1, 3, 1}, {2, 2, 2}, {3, 1, 3}});
  const Code e = ext(c1, c2);
  CHECK(e.graph.q() == 6);
  CHECK(e.size() == 6);
  const Code expect = Code::of(
      HammingGraph(6, 3), {{1, 5, 1}, {3, 3, 3}, {5, 1, 5}, {2, 6, 2}, {4, 4, 4}, {6, 2, 6}});
  CHECK(word_set(e) == word_set(expect));
}

TEST_CASE("cyclic plane code hits every pipe exactly once") {
  for (int q : {3, 4, 7}) {
    const Code c = construct_cq(q);
    CHECK(c.size() == static_cast<std::size_t>(q) * q);
    for (const Vertex& v : c.vertices()) CHECK((v[0] + v[1] + v[2]) % q == 0);
    // one codeword per tower
    std::set<std::pair<int, int>> towers;
    for (const Vertex& v : c.vertices()) CHECK(towers.emplace(v[0], v[1]).second);
  }
}

TEST_CASE("the fifteen word code is the listed set") {
  const Code c = construct_c1();
  CHECK(c.graph.q() == 4);
  CHECK(c.size() == 15);
  const Code expect = Code::of(HammingGraph(4, 3), {{2, 1, 3},
                                                    {2, 1, 4},
                                                    {3, 1, 1},
                                                    {4, 1, 2},
                                                    {1, 2, 2},
                                                    {1, 2, 4},
                                                    {2, 2, 4},
                                                    {3, 2, 2},
                                                    {1, 3, 1},
                                                    {2, 3, 2},
                                                    {3, 3, 3},
                                                    {4, 3, 3},
                                                    {2, 4, 4},
                                                    {4, 4, 1},
                                                    {4, 4, 3}});
  CHECK(word_set(c) == word_set(expect));
  CHECK(is_identifying(c.graph, c.words).holds);
}

TEST_CASE("the twelve word code avoids the diagonal and its neighborhood") {
  const Code c = construct_cl();
  CHECK(c.size() == 12);
  // no codeword inside N[diagonal]
  for (const Vertex& d : diagonal(4)) {
    const VertexId dv = c.graph.index_of(d);
    for (VertexId w : c.words) CHECK_FALSE(c.graph.in_ball(dv, w));
  }
  // codewords cover only themselves
  for (VertexId w : c.words) CHECK(i_set(c, w) == std::vector<VertexId>{w});
}

TEST_CASE("diagonal lists the constant tuples") {
  const auto d = diagonal(3);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == Vertex{1, 1, 1});
  CHECK(d[1] == Vertex{2, 2, 2});
  CHECK(d[2] == Vertex{3, 3, 3});
}

TEST_CASE("ext multiplies sizes and rejects mismatched inputs") {
  const Code a = construct_cq(3);
  const Code b = construct_cq(4);
  const Code e = ext(a, b);
  CHECK(e.graph.q() == 12);
  CHECK(e.size() == a.size() * b.size());

  HammingGraph removed(3, 3);
  removed.remove_vertex(VertexId{0});
  const Code bad(std::move(removed), {1});
  CHECK_THROWS_AS(ext(bad, b), std::invalid_argument);
}

TEST_CASE("recursive family: sizes, membership and the base case") {
  const Code t1 = construct_ct(1);
  CHECK(word_set(t1) == word_set(construct_c1()));

  const Code t2 = construct_ct(2);
  CHECK(t2.graph.q() == 16);
  CHECK(t2.size() == 252);  // 16^2 - 16/4

  // a sample from each half: cyclic-in-subcube at an off-diagonal outer cell,
  // and the base code inside a diagonal subcube
  CHECK(t2.contains(t2.graph.index_of({8, 4, 12})));
  CHECK(t2.contains(t2.graph.index_of({2, 1, 3})));

  const Code t3 = construct_ct(3);
  CHECK(t3.graph.q() == 64);
  CHECK(t3.size() == 4080);  // 64^2 - 64/4

  CHECK_THROWS_AS(construct_ct(0), std::invalid_argument);
  CHECK_THROWS_AS(construct_ct(6), std::invalid_argument);
}

TEST_CASE("identifying extension sizes and error bounds") {
  const Code base = construct_c1();
  for (int r : {8, 9, 10}) {
    const Code big = extend_identifying(base, r);
    CHECK(big.graph.q() == r);
    CHECK(big.size() == base.size() + static_cast<std::size_t>(r) * r - 16);
    // original words survive re-indexing
    CHECK(big.contains(big.graph.index_of({2, 1, 3})));
  }
  CHECK_THROWS_AS(extend_identifying(base, 7), std::invalid_argument);
}

TEST_CASE("best known sizes by alphabet") {
  CHECK(best_known_upper(2) == 4);
  CHECK(best_known_upper(3) == 9);
  CHECK(best_known_upper(4) == 15);
  CHECK(best_known_upper(5) == 25);
  CHECK(best_known_upper(7) == 49);
  CHECK(best_known_upper(8) == 63);
  CHECK(best_known_upper(9) == 80);
  CHECK(best_known_upper(16) == 252);
  CHECK(best_known_upper(31) == 960);
  CHECK(best_known_upper(32) == 1020);
  CHECK(best_known_upper(33) == 1085);
  CHECK(best_known_upper(64) == 4080);
  CHECK(best_known_upper(127) == 16125);
  CHECK(best_known_upper(128) == 16368);
  CHECK(best_known_upper(256) == 65472);
}

}  // TEST_SUITE
