#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hamcode {

using VertexId = std::uint32_t;

// A vertex of K_q^n as its coordinate tuple, 1-based values in 1..q.
using Vertex = std::vector<int>;

// Hamming graph K_q^n: vertices are the n-tuples over {1,...,q}, two tuples
// adjacent iff they differ in exactly one coordinate.  Every closed
// neighborhood has n(q-1)+1 vertices (3q-2 when n=3).
//
// Vertices are addressed by dense mixed-radix ids in [0, q^n) so codes,
// cover counts and membership sets can live in flat arrays; coordinate i
// contributes (value-1) * q^i.  Vertices may be removed ("graph minus a
// vertex set"); removed ids stay in the index space but fail contains()
// and are skipped by all iteration.
class HammingGraph {
 public:
  HammingGraph(int q, int n);

  int q() const { return q_; }
  int n() const { return n_; }

  // size of the id space q^n, removed ids included
  VertexId index_limit() const { return limit_; }
  // number of present vertices
  VertexId vertex_count() const { return limit_ - removed_count_; }
  bool has_removals() const { return removed_count_ > 0; }

  VertexId index_of(const Vertex& v) const;
  Vertex vertex_at(VertexId id) const;
  // 1-based value of the given coordinate, axis in [0, n)
  int coordinate(VertexId id, int axis) const;

  void remove_vertex(VertexId id);
  void remove_vertex(const Vertex& v) { remove_vertex(index_of(v)); }

  bool contains(VertexId id) const { return id < limit_ && !removed_[id]; }

  // N[v]: v together with its neighbors, removed vertices excluded
  std::vector<VertexId> closed_neighborhood(VertexId v) const;

  // membership in N[center] without materializing the neighborhood, O(n)
  bool in_ball(VertexId center, VertexId v) const;

  template <class F>
  void for_each_vertex(F&& f) const {
    for (VertexId v = 0; v < limit_; ++v)
      if (!removed_[v]) f(v);
  }

  // Visits every present vertex of N[v]: v itself first, then for each axis
  // the q-1 single-coordinate substitutions.
  template <class F>
  void for_each_in_ball(VertexId v, F&& f) const {
    if (!removed_[v]) f(v);
    for (int axis = 0; axis < n_; ++axis) {
      const VertexId stride = stride_[axis];
      const VertexId digit = (v / stride) % static_cast<VertexId>(q_);
      const VertexId base = v - digit * stride;
      for (VertexId d = 0; d < static_cast<VertexId>(q_); ++d) {
        if (d == digit) continue;
        const VertexId u = base + d * stride;
        if (!removed_[u]) f(u);
      }
    }
  }

  std::string label(VertexId v) const;  // "(a,b,c)"

 private:
  int q_, n_;
  VertexId limit_;
  VertexId removed_count_ = 0;
  std::vector<VertexId> stride_;
  std::vector<bool> removed_;
};

// The pipe through v with the given free axis: all present vertices agreeing
// with v on every coordinate except possibly free_axis.  Pipes are cliques;
// in K_q^3 the three pipes through v cover N[v].
std::vector<VertexId> pipe(const HammingGraph& g, VertexId v, int free_axis);

// Arbitrary undirected graph on at most 64 labelled vertices, for fixture
// graphs and small experiments.  Same id-based interface as HammingGraph.
class GenericGraph {
 public:
  VertexId add_vertex(std::string label);
  void add_edge(VertexId a, VertexId b);
  void add_edge(const std::string& a, const std::string& b);

  VertexId index_limit() const { return static_cast<VertexId>(adj_.size()); }
  VertexId vertex_count() const { return static_cast<VertexId>(adj_.size()); }
  bool has_removals() const { return false; }
  bool contains(VertexId v) const { return v < adj_.size(); }

  std::vector<VertexId> closed_neighborhood(VertexId v) const;
  bool in_ball(VertexId center, VertexId v) const;

  template <class F>
  void for_each_vertex(F&& f) const {
    for (VertexId v = 0; v < adj_.size(); ++v) f(v);
  }

  template <class F>
  void for_each_in_ball(VertexId v, F&& f) const {
    check_vertex(v);
    f(v);
    std::uint64_t m = adj_[v];
    while (m) {
      const int b = __builtin_ctzll(m);
      m &= m - 1;
      f(static_cast<VertexId>(b));
    }
  }

  std::string label(VertexId v) const;
  // id of the vertex with the given label; throws if absent
  VertexId by_label(const std::string& label) const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::uint64_t> adj_;  // open neighborhoods as bitmasks
  std::vector<std::string> labels_;
};

}  // namespace hamcode
