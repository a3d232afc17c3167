#include "hamcode/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hamcode/field.hpp"
#include "hamcode/verify.hpp"

namespace hamcode {
namespace {

unsigned long long ipow(unsigned long long b, int e) {
  unsigned long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

unsigned long long ceil_div(unsigned long long a, unsigned long long b) {
  return (a + b - 1) / b;
}

// floor of sqrt on integers, exact
unsigned long long isqrt(unsigned long long x) {
  auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct LayerContext {
  const HammingGraph& g;
  const Code& code;
  std::vector<std::vector<VertexId>> covers;  // I(v) per raw id
  std::vector<bool> member;

  explicit LayerContext(const Code& c) : g(c.graph), code(c) {
    member.assign(g.index_limit(), false);
    for (VertexId w : c.words) member[w] = true;
    covers.resize(g.index_limit());
    g.for_each_vertex([&](VertexId v) {
      g.for_each_in_ball(v, [&](VertexId u) {
        if (member[u]) covers[v].push_back(u);
      });
    });
  }

  bool in_layer(VertexId v, int axis, int value) const {
    return g.coordinate(v, axis) == value;
  }
};

// two vertices share a pipe iff they differ in at most one coordinate
bool same_pipe(const HammingGraph& g, VertexId a, VertexId b) {
  int diff = 0;
  for (int axis = 0; axis < 3; ++axis)
    if (g.coordinate(a, axis) != g.coordinate(b, axis)) ++diff;
  return diff <= 1;
}

}  // namespace

LayerAnalysis layer_analysis(const Code& code) {
  const HammingGraph& g = code.graph;
  if (g.n() != 3) throw std::invalid_argument("layer_analysis: code must live in K_q^3");
  if (g.has_removals()) throw std::invalid_argument("layer_analysis: graph must be complete");
  const int q = g.q();
  const LayerContext ctx(code);

  LayerAnalysis out;
  std::set<VertexId> xs, ys;
  std::vector<std::vector<std::pair<int, int>>> cornered(g.index_limit());

  for (int axis = 0; axis < 3; ++axis) {
    const int free_a = axis == 0 ? 1 : 0;
    const int free_b = axis == 2 ? 1 : 2;
    for (int value = 1; value <= q; ++value) {
      LayerStats st;
      st.axis = axis;
      st.value = value;

      std::vector<VertexId> layer_words;
      std::set<int> rows_hit, cols_hit;
      g.for_each_vertex([&](VertexId v) {
        if (!ctx.in_layer(v, axis, value)) return;
        std::size_t in_layer_covers = 0;
        bool self_only = false;
        for (VertexId c : ctx.covers[v])
          if (ctx.in_layer(c, axis, value)) {
            ++in_layer_covers;
            self_only = in_layer_covers == 1 && c == v;
          }
        if (in_layer_covers == 0) {
          ++st.x_count;
          xs.insert(v);
        } else if (self_only) {
          ++st.y_count;
          ys.insert(v);
        }
        if (ctx.member[v]) {
          layer_words.push_back(v);
          rows_hit.insert(g.coordinate(v, free_a));
          cols_hit.insert(g.coordinate(v, free_b));
        }
      });

      st.codeword_count = layer_words.size();
      st.a = static_cast<long long>(q) - static_cast<long long>(st.codeword_count);
      const std::size_t hit = std::max(rows_hit.size(), cols_hit.size());
      st.min_dom_superset = st.codeword_count + (static_cast<std::size_t>(q) - hit);
      st.f = static_cast<long long>(st.min_dom_superset) - q;

      // in-layer corners get counted once the global roles are known; stash
      // the candidate pairs now
      for (VertexId c : layer_words) {
        bool split = false;
        const auto& ic = ctx.covers[c];
        for (std::size_t i = 0; i < ic.size() && !split; ++i) {
          if (!ctx.in_layer(ic[i], axis, value)) continue;
          for (std::size_t j = i + 1; j < ic.size() && !split; ++j)
            if (ctx.in_layer(ic[j], axis, value) && !same_pipe(g, ic[i], ic[j])) split = true;
        }
        if (split) cornered[c].emplace_back(axis, value);
      }

      out.layers.push_back(st);
    }
  }

  out.x_vertices.assign(xs.begin(), xs.end());
  out.y_vertices.assign(ys.begin(), ys.end());

  for (VertexId w : code.words) {
    CodewordAnalysis ca;
    ca.word = w;
    const bool in_y = ys.count(w) > 0;
    if (!in_y) {
      ca.role = CodewordRole::Corner;
      ca.layers_cornered = cornered[w];
      for (const auto& [axis, value] : cornered[w]) {
        auto& st = out.layers[static_cast<std::size_t>(axis) * q + (value - 1)];
        ++st.corners;
      }
    } else {
      ca.role = ctx.covers[w].size() > 1 ? CodewordRole::Fellow : CodewordRole::Plain;
    }
    out.roles.push_back(std::move(ca));
  }
  return out;
}

LemmaReport check_layer_lemmas(const Code& code) {
  const HammingGraph& g = code.graph;
  if (!is_identifying(g, code.words).holds)
    throw std::invalid_argument("check_layer_lemmas: code is not identifying");
  const int q = g.q();

  LemmaReport rep;
  rep.analysis = layer_analysis(code);
  const LayerAnalysis& an = rep.analysis;
  const LayerContext ctx(code);

  std::vector<char> is_x(g.index_limit(), 0), is_corner(g.index_limit(), 0),
      is_fellow(g.index_limit(), 0);
  for (VertexId v : an.x_vertices) is_x[v] = 1;
  for (const auto& ca : an.roles) {
    if (ca.role == CodewordRole::Corner) is_corner[ca.word] = 1;
    if (ca.role == CodewordRole::Fellow) is_fellow[ca.word] = 1;
  }

  const auto push = [&rep](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };

  // pipe exclusion rules, checked over all 3 q^2 pipes
  {
    bool multi_fellow = true, corner_fellow_x = true, codeword_two_x = true;
    std::string d1, d2, d3;
    for (int axis = 0; axis < 3 && (multi_fellow || corner_fellow_x || codeword_two_x); ++axis) {
      const int oa = axis == 0 ? 1 : 0;
      const int ob = axis == 2 ? 1 : 2;
      for (int va = 1; va <= q; ++va)
        for (int vb = 1; vb <= q; ++vb) {
          Vertex rep_v(3);
          rep_v[axis] = 1;
          rep_v[oa] = va;
          rep_v[ob] = vb;
          const auto line = pipe(g, g.index_of(rep_v), axis);
          int fellows = 0, corners = 0, codewords = 0, xcount = 0;
          for (VertexId v : line) {
            fellows += is_fellow[v];
            corners += is_corner[v];
            codewords += ctx.member[v];
            xcount += is_x[v];
          }
          if (fellows > 1 && multi_fellow) {
            multi_fellow = false;
            d1 = "pipe with " + std::to_string(fellows) + " fellows";
          }
          if (corners > 0 && fellows > 0 && xcount > 0 && corner_fellow_x) {
            corner_fellow_x = false;
            d2 = "pipe holding a corner, a fellow and an uncovered-in-layer vertex";
          }
          if (codewords > 0 && xcount >= 2 && codeword_two_x) {
            codeword_two_x = false;
            d3 = "pipe holding a codeword and two uncovered-in-layer vertices";
          }
        }
    }
    push("pipe-no-two-fellows", multi_fellow, std::move(d1));
    push("pipe-no-corner-fellow-x", corner_fellow_x, std::move(d2));
    push("pipe-no-codeword-two-x", codeword_two_x, std::move(d3));
  }

  // every x in X sees a corner directly or through a fellow
  {
    bool ok = true;
    std::string detail;
    for (VertexId x : an.x_vertices) {
      bool linked = false;
      for (VertexId c : ctx.covers[x]) {
        if (is_corner[c]) {
          linked = true;
          break;
        }
        if (is_fellow[c])
          for (VertexId c2 : ctx.covers[c])
            if (is_corner[c2]) {
              linked = true;
              break;
            }
        if (linked) break;
      }
      if (!linked) {
        ok = false;
        detail = "vertex " + g.label(x) + " has no corner link";
        break;
      }
    }
    push("x-linked-to-corner", ok, std::move(detail));
  }

  long long corner_sum = 0, f_sum = 0, quad_sum = 0;
  bool per_layer_fk = true, per_layer_quad = true;
  std::string fk_detail, quad_detail;
  for (const LayerStats& st : an.layers) {
    corner_sum += static_cast<long long>(st.corners);
    f_sum += st.f;
    quad_sum += (st.a + st.f) * (st.a + st.f);
    if (2 * st.f < static_cast<long long>(st.corners) && per_layer_fk) {
      per_layer_fk = false;
      std::ostringstream os;
      os << "layer axis " << st.axis << " value " << st.value << ": 2f = " << 2 * st.f
         << " < corners = " << st.corners;
      fk_detail = os.str();
    }
    if (static_cast<long long>(st.x_count) < (st.a + st.f) * (st.a + st.f) && per_layer_quad) {
      per_layer_quad = false;
      std::ostringstream os;
      os << "layer axis " << st.axis << " value " << st.value << ": |X| = " << st.x_count
         << " < (a+f)^2 = " << (st.a + st.f) * (st.a + st.f);
      quad_detail = os.str();
    }
  }
  const auto x_total = static_cast<long long>(an.x_vertices.size());
  push("per-layer-2f-geq-corners", per_layer_fk, std::move(fk_detail));
  push("per-layer-x-geq-quadratic", per_layer_quad, std::move(quad_detail));
  push("x-leq-3-corner-sum", x_total <= 3 * corner_sum,
       "|X| = " + std::to_string(x_total) + " > 3 * " + std::to_string(corner_sum));
  push("x-leq-6-f-sum", x_total <= 6 * f_sum,
       "|X| = " + std::to_string(x_total) + " > 6 * " + std::to_string(f_sum));
  push("x-geq-quadratic-sum", x_total >= quad_sum,
       "|X| = " + std::to_string(x_total) + " < " + std::to_string(quad_sum));

  rep.all_ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const LemmaCheck& c) { return c.ok; });
  return rep;
}

LowerBounds lower_bounds(int q, int n) {
  if (q < 2) throw std::invalid_argument("lower_bounds: q must be >= 2");
  if (n < 1) throw std::invalid_argument("lower_bounds: n must be >= 1");
  LowerBounds b;
  b.q = q;
  b.n = n;
  const unsigned long long qn = ipow(q, n);
  b.karpovsky = ceil_div(2 * qn, static_cast<unsigned long long>(n) * q - n + 2);
  b.sid = ceil_div(3 * qn, static_cast<unsigned long long>(n) * (q - 1) + 1);
  if (n == 3) {
    const unsigned long long qq = static_cast<unsigned long long>(q) * q;
    b.id3_quadratic = qq - (3ull * q) / 2;
    b.id3_sqrt = qq - isqrt(static_cast<unsigned long long>(q) * q * q);
    b.sld3 = qq;
    b.dom3 = ceil_div(qq, 2);
  }
  return b;
}

RatioReport ratio_report(int q, int k) {
  if (k < 1) throw std::invalid_argument("ratio_report: k must be >= 1");
  FiniteField::of_order(q);  // the compared code needs a field of order q
  const unsigned long long qk = ipow(q, k);
  if (qk > 1u << 20) throw std::invalid_argument("ratio_report: q^k too large");
  RatioReport r;
  r.q = q;
  r.k = k;
  r.n = static_cast<int>(3 * (qk - 1) / (q - 1));
  r.upper = ipow(q, r.n - k);
  r.lower = lower_bounds(q, r.n).karpovsky;
  r.ratio = static_cast<double>(r.upper) / static_cast<double>(r.lower);
  r.chain_ok = 3 * r.lower >= 2 * r.upper;
  return r;
}

}  // namespace hamcode
