#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "hamcode/bounds.hpp"
#include "hamcode/construct3.hpp"
#include "hamcode/graph.hpp"
#include "oracles.hpp"

using namespace hamcode;

namespace {

const LayerStats& layer_of(const LayerAnalysis& a, int q, int axis, int value) {
  return a.layers.at(static_cast<std::size_t>(axis) * q + (value - 1));
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("cyclic plane codes have featureless layers") {
  for (int q : {3, 4, 5, 6}) {
    const Code c = construct_cq(q);
    const LayerAnalysis a = layer_analysis(c);
    REQUIRE(a.layers.size() == static_cast<std::size_t>(3 * q));
    for (const LayerStats& st : a.layers) {
      CHECK(st.codeword_count == static_cast<std::size_t>(q));
      CHECK(st.a == 0);
      CHECK(st.f == 0);
      CHECK(st.min_dom_superset == static_cast<std::size_t>(q));
      CHECK(st.x_count == 0);
      CHECK(st.y_count == static_cast<std::size_t>(q));
      CHECK(st.corners == 0);
    }
    CHECK(a.x_vertices.empty());
    CHECK(a.y_vertices.size() == c.size());
    for (const CodewordAnalysis& ca : a.roles) CHECK(ca.role == CodewordRole::Plain);
  }
}

TEST_CASE("single layer fixture: corners, extra domination cost and X size") {
  // ten codewords placed in the z = 1 layer of K_12^3: a staircase with two
  // doubled steps and one far cell, leaving rows 1..4 and columns 8..12 bare
  HammingGraph g(12, 3);
  const std::vector<std::pair<int, int>> corners_drawn = {{7, 3}, {10, 1}, {10, 2}};
  const std::vector<std::pair<int, int>> others_drawn = {{5, 6}, {6, 5}, {7, 4}, {8, 3},
                                                         {9, 2}, {11, 1}, {12, 7}};
  std::vector<Vertex> words;
  for (auto [r, s] : corners_drawn) words.push_back({r, s, 1});
  for (auto [r, s] : others_drawn) words.push_back({r, s, 1});
  const Code code = Code::of(std::move(g), words);

  const LayerAnalysis a = layer_analysis(code);
  const LayerStats& st = layer_of(a, 12, 2, 1);
  CHECK(st.codeword_count == 10);
  CHECK(st.a == 2);
  CHECK(st.min_dom_superset == 14);
  CHECK(st.f == 2);
  CHECK(st.corners == 3);
  CHECK(st.x_count == 20);
  CHECK(st.x_count >= static_cast<std::size_t>((st.a + st.f) * (st.a + st.f)));
  CHECK(2 * st.f >= static_cast<long long>(st.corners));

  // role classification: the three marked cells are corners, the lone cells
  // are plain, the rest sit next to a corner
  std::size_t n_corner = 0, n_fellow = 0, n_plain = 0;
  for (const CodewordAnalysis& ca : a.roles) {
    const Vertex v = code.graph.vertex_at(ca.word);
    const bool drawn_corner =
        std::find(corners_drawn.begin(), corners_drawn.end(),
                  std::make_pair(v[0], v[1])) != corners_drawn.end();
    CHECK((ca.role == CodewordRole::Corner) == drawn_corner);
    if (ca.role == CodewordRole::Corner) ++n_corner;
    if (ca.role == CodewordRole::Fellow) ++n_fellow;
    if (ca.role == CodewordRole::Plain) ++n_plain;
  }
  CHECK(n_corner == 3);
  CHECK(n_fellow == 4);
  CHECK(n_plain == 3);
}

TEST_CASE("minimum dominating supersets match brute force on random layers") {
  std::mt19937 rng(20240817);
  for (int q : {3, 4}) {
    for (int trial = 0; trial < 12; ++trial) {
      HammingGraph g(q, 3);
      std::vector<VertexId> words;
      std::uniform_int_distribution<VertexId> pick(0, g.index_limit() - 1);
      const int target = 1 + static_cast<int>(rng() % (2 * q));
      while (static_cast<int>(words.size()) < target) words.push_back(pick(rng));
      const Code code(std::move(g), words);
      const LayerAnalysis a = layer_analysis(code);
      for (const LayerStats& st : a.layers) {
        // gather this layer's codewords as grid cells over the free axes
        const int fa = st.axis == 0 ? 1 : 0;
        const int fb = st.axis == 2 ? 1 : 2;
        std::vector<int> cells;
        for (VertexId w : code.words) {
          const Vertex v = code.graph.vertex_at(w);
          if (v[st.axis] != st.value) continue;
          cells.push_back((v[fa] - 1) * q + (v[fb] - 1));
        }
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        CHECK(st.min_dom_superset == oracles::naive_min_dominating_superset(q, cells));
      }
    }
  }
}

TEST_CASE("structural lemmas hold for all the identifying constructions") {
  auto all_ok = [](const Code& c) {
    const LemmaReport rep = check_layer_lemmas(c);
    for (const LemmaCheck& ch : rep.checks) {
      CAPTURE(ch.name);
      CAPTURE(ch.detail);
      CHECK(ch.ok);
    }
    return rep.all_ok;
  };
  CHECK(all_ok(construct_c1()));
  for (int q : {3, 4, 5, 6, 7, 8}) CHECK(all_ok(construct_cq(q)));
  CHECK(all_ok(construct_ct(2)));
  CHECK(all_ok(extend_identifying(construct_c1(), 8)));
}

TEST_CASE("lemma checking rejects non-identifying codes") {
  HammingGraph g(3, 3);
  const Code c(std::move(g), {0});
  CHECK_THROWS_AS(check_layer_lemmas(c), std::invalid_argument);
}

TEST_CASE("lower bound formulas at frozen points") {
  const LowerBounds b43 = lower_bounds(4, 3);
  CHECK(b43.karpovsky == 12);
  CHECK(b43.sid == 20);
  CHECK(b43.id3_quadratic == 10);
  CHECK(b43.id3_sqrt == 8);
  CHECK(b43.sld3 == 16);
  CHECK(b43.dom3 == 8);

  const LowerBounds b33 = lower_bounds(3, 3);
  CHECK(b33.karpovsky == 7);
  CHECK(b33.sid == 12);
  CHECK(b33.id3_quadratic == 5);
  CHECK(b33.id3_sqrt == 4);
  CHECK(b33.sld3 == 9);
  CHECK(b33.dom3 == 5);

  const LowerBounds b22 = lower_bounds(2, 2);
  CHECK(b22.karpovsky == 2);
  CHECK(b22.sid == 4);
  CHECK_FALSE(b22.id3_quadratic.has_value());
  CHECK_FALSE(b22.sld3.has_value());

  const LowerBounds b64 = lower_bounds(64, 3);
  CHECK(b64.id3_quadratic == 64 * 64 - 96);
  CHECK(b64.sld3 == 4096);

  CHECK_THROWS_AS(lower_bounds(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(lower_bounds(3, 0), std::invalid_argument);
}

TEST_CASE("the quadratic bound eventually beats the square root bound") {
  for (int q = 3; q <= 64; ++q) {
    const LowerBounds b = lower_bounds(q, 3);
    REQUIRE(b.id3_quadratic.has_value());
    REQUIRE(b.id3_sqrt.has_value());
    CHECK(*b.id3_quadratic >= *b.id3_sqrt);
  }
}

TEST_CASE("tripled-column comparisons stay within factor three halves") {
  const RatioReport r22 = ratio_report(2, 2);
  CHECK(r22.n == 9);
  CHECK(r22.upper == 128);
  CHECK(r22.lower == 94);
  CHECK(r22.ratio == doctest::Approx(128.0 / 94.0));
  CHECK(r22.chain_ok);

  const RatioReport r31 = ratio_report(3, 1);
  CHECK(r31.n == 3);
  CHECK(r31.upper == 9);
  CHECK(r31.lower == 7);
  CHECK(r31.chain_ok);

  const RatioReport r41 = ratio_report(4, 1);
  CHECK(r41.upper == 16);
  CHECK(r41.lower == 12);
  CHECK(r41.chain_ok);

  const RatioReport r23 = ratio_report(2, 3);
  CHECK(r23.n == 21);
  CHECK(r23.upper == 262144);
  CHECK(r23.lower == 182362);
  CHECK(r23.chain_ok);

  const RatioReport r32 = ratio_report(3, 2);
  CHECK(r32.n == 12);
  CHECK(r32.upper == 59049);
  CHECK(r32.chain_ok);

  CHECK_THROWS_AS(ratio_report(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(ratio_report(3, 0), std::invalid_argument);
}

}  // TEST_SUITE
