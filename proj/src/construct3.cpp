#include "hamcode/construct3.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamcode/latin.hpp"

namespace hamcode {

SextupleView::SextupleView(int inner_q, int outer_m) : q(inner_q), m(outer_m) {
  if (q < 1 || m < 1) throw std::invalid_argument("SextupleView: factors must be >= 1");
}

Vertex SextupleView::flatten(const std::array<int, 6>& s) const {
  for (int i = 0; i < 3; ++i)
    if (s[i] < 1 || s[i] > q)
      throw std::invalid_argument("flatten: inner coordinate out of range");
  for (int i = 3; i < 6; ++i)
    if (s[i] < 1 || s[i] > m)
      throw std::invalid_argument("flatten: outer coordinate out of range");
  return {s[0] + q * (s[3] - 1), s[1] + q * (s[4] - 1), s[2] + q * (s[5] - 1)};
}

std::array<int, 6> SextupleView::split(const Vertex& v) const {
  if (v.size() != 3) throw std::invalid_argument("split: need a K^3 vertex");
  std::array<int, 6> s{};
  for (int i = 0; i < 3; ++i) {
    if (v[i] < 1 || v[i] > q * m) throw std::invalid_argument("split: coordinate out of range");
    s[i] = (v[i] - 1) % q + 1;
    s[i + 3] = (v[i] - 1) / q + 1;
  }
  return s;
}

Code construct_cq(int q) {
  if (q < 1) throw std::invalid_argument("construct_cq: q must be >= 1");
  HammingGraph g(q, 3);
  std::vector<VertexId> words;
  words.reserve(static_cast<std::size_t>(q) * q);
  for (int a = 1; a <= q; ++a)
    for (int b = 1; b <= q; ++b)
      for (int c = 1; c <= q; ++c)
        if ((a + b + c) % q == 0) words.push_back(g.index_of({a, b, c}));
  return Code(std::move(g), std::move(words));
}

Code construct_c1() {
  static const std::vector<Vertex> words = {
      {2, 1, 3}, {2, 1, 4}, {3, 1, 1}, {4, 1, 2}, {1, 2, 2},
      {1, 2, 4}, {2, 2, 4}, {3, 2, 2}, {1, 3, 1}, {2, 3, 2},
      {3, 3, 3}, {4, 3, 3}, {2, 4, 4}, {4, 4, 1}, {4, 4, 3},
  };
  return Code::of(HammingGraph(4, 3), words);
}

Code construct_cl() {
  static const std::vector<Vertex> words = {
      {2, 1, 3}, {3, 1, 4}, {4, 1, 2}, {1, 2, 4}, {3, 2, 1}, {4, 2, 3},
      {1, 3, 2}, {2, 3, 4}, {4, 3, 1}, {1, 4, 3}, {2, 4, 1}, {3, 4, 2},
  };
  return Code::of(HammingGraph(4, 3), words);
}

std::vector<Vertex> diagonal(int q) {
  if (q < 1) throw std::invalid_argument("diagonal: q must be >= 1");
  std::vector<Vertex> out;
  out.reserve(q);
  for (int j = 1; j <= q; ++j) out.push_back({j, j, j});
  return out;
}

Code ext(const Code& inner, const Code& outer) {
  if (inner.graph.n() != 3 || outer.graph.n() != 3)
    throw std::invalid_argument("ext: both codes must live in K^3 graphs");
  if (inner.graph.has_removals() || outer.graph.has_removals())
    throw std::invalid_argument("ext: ambient graphs must be complete");
  const int q = inner.graph.q(), m = outer.graph.q();
  const SextupleView view(q, m);
  HammingGraph g(q * m, 3);
  std::vector<VertexId> words;
  words.reserve(inner.size() * outer.size());
  for (VertexId wi : inner.words) {
    const Vertex vi = inner.graph.vertex_at(wi);
    for (VertexId wo : outer.words) {
      const Vertex vo = outer.graph.vertex_at(wo);
      words.push_back(g.index_of(view.flatten({vi[0], vi[1], vi[2], vo[0], vo[1], vo[2]})));
    }
  }
  return Code(std::move(g), std::move(words));
}

Code construct_ct(int t) {
  if (t < 1) throw std::invalid_argument("construct_ct: t must be >= 1");
  if (t > 5) throw std::invalid_argument("construct_ct: q = 4^t too large beyond t = 5");
  if (t == 1) return construct_c1();
  long long q = 1;
  for (int i = 0; i < t; ++i) q *= 4;

  const Code part_a = ext(construct_cq(static_cast<int>(q / 4)), construct_cl());
  const Code part_b = ext(construct_ct(t - 1), Code::of(HammingGraph(4, 3), diagonal(4)));

  std::vector<VertexId> words = part_a.words;
  const std::size_t before = words.size() + part_b.words.size();
  words.insert(words.end(), part_b.words.begin(), part_b.words.end());
  Code out(part_a.graph, std::move(words));
  if (out.size() != before)
    throw std::logic_error("construct_ct: the two parts overlap");
  return out;
}

Code extend_identifying(const Code& code, int r) {
  if (code.graph.n() != 3)
    throw std::invalid_argument("extend_identifying: code must live in K_q^3");
  if (code.graph.has_removals())
    throw std::invalid_argument("extend_identifying: ambient graph must be complete");
  const int q = code.graph.q();
  if (r < 2 * q)
    throw std::invalid_argument("extend_identifying: target side must be at least 2q");

  const LatinSquare big = extend_latin(cyclic_latin(q), r);
  HammingGraph g(r, 3);
  std::vector<VertexId> words;
  words.reserve(code.size() + static_cast<std::size_t>(r) * r - static_cast<std::size_t>(q) * q);
  for (VertexId w : code.words) words.push_back(g.index_of(code.graph.vertex_at(w)));
  for (int x = 1; x <= r; ++x)
    for (int y = 1; y <= r; ++y)
      if (x > q || y > q) words.push_back(g.index_of({x, y, big.at(x, y)}));
  return Code(std::move(g), std::move(words));
}

long long best_known_upper(int q) {
  if (q < 1) throw std::invalid_argument("best_known_upper: q must be >= 1");
  const long long qq = static_cast<long long>(q) * q;
  for (long long p = 4; p <= q; p *= 4)
    if (p == q) return qq - q / 4;
  for (long long t = 1, band = 8; band <= q; ++t, band *= 4) {
    if (q <= 4 * band - 1) {
      long long cut = 1;
      for (long long i = 1; i < t; ++i) cut *= 4;
      return qq - cut;
    }
  }
  return qq;
}

}  // namespace hamcode
