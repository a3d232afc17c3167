#include "hamcode/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hamcode {

HammingGraph::HammingGraph(int q, int n) : q_(q), n_(n) {
  if (q < 1) throw std::invalid_argument("HammingGraph: q must be >= 1");
  if (n < 1) throw std::invalid_argument("HammingGraph: n must be >= 1");
  unsigned long long lim = 1;
  stride_.reserve(n);
  for (int i = 0; i < n; ++i) {
    stride_.push_back(static_cast<VertexId>(lim));
    lim *= static_cast<unsigned long long>(q);
    if (lim > (1ull << 31))
      throw std::invalid_argument("HammingGraph: q^n too large for dense indexing");
  }
  limit_ = static_cast<VertexId>(lim);
  removed_.assign(limit_, false);
}

VertexId HammingGraph::index_of(const Vertex& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("index_of: vertex has wrong number of coordinates");
  VertexId id = 0;
  for (int i = 0; i < n_; ++i) {
    if (v[i] < 1 || v[i] > q_)
      throw std::invalid_argument("index_of: coordinate out of range 1..q");
    id += static_cast<VertexId>(v[i] - 1) * stride_[i];
  }
  return id;
}

Vertex HammingGraph::vertex_at(VertexId id) const {
  if (id >= limit_) throw std::invalid_argument("vertex_at: id out of range");
  Vertex v(n_);
  for (int i = 0; i < n_; ++i)
    v[i] = static_cast<int>((id / stride_[i]) % static_cast<VertexId>(q_)) + 1;
  return v;
}

int HammingGraph::coordinate(VertexId id, int axis) const {
  if (id >= limit_) throw std::invalid_argument("coordinate: id out of range");
  if (axis < 0 || axis >= n_) throw std::invalid_argument("coordinate: bad axis");
  return static_cast<int>((id / stride_[axis]) % static_cast<VertexId>(q_)) + 1;
}

void HammingGraph::remove_vertex(VertexId id) {
  if (id >= limit_) throw std::invalid_argument("remove_vertex: id out of range");
  if (!removed_[id]) {
    removed_[id] = true;
    ++removed_count_;
  }
}

std::vector<VertexId> HammingGraph::closed_neighborhood(VertexId v) const {
  if (!contains(v))
    throw std::invalid_argument("closed_neighborhood: vertex not in graph");
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(n_) * (q_ - 1) + 1);
  for_each_in_ball(v, [&](VertexId u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

bool HammingGraph::in_ball(VertexId center, VertexId v) const {
  if (!contains(center) || !contains(v)) return false;
  int diff = 0;
  for (int i = 0; i < n_; ++i) {
    if ((center / stride_[i]) % static_cast<VertexId>(q_) !=
        (v / stride_[i]) % static_cast<VertexId>(q_)) {
      if (++diff > 1) return false;
    }
  }
  return true;
}

std::string HammingGraph::label(VertexId v) const {
  if (v >= limit_) throw std::invalid_argument("label: id out of range");
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << (v / stride_[i]) % static_cast<VertexId>(q_) + 1;
  }
  os << ')';
  return os.str();
}

std::vector<VertexId> pipe(const HammingGraph& g, VertexId v, int free_axis) {
  if (!g.contains(v)) throw std::invalid_argument("pipe: vertex not in graph");
  if (free_axis < 0 || free_axis >= g.n())
    throw std::invalid_argument("pipe: free axis out of range");
  if (g.n() < 2) throw std::invalid_argument("pipe: graph needs n >= 2");
  Vertex coords = g.vertex_at(v);
  std::vector<VertexId> out;
  out.reserve(g.q());
  for (int val = 1; val <= g.q(); ++val) {
    coords[free_axis] = val;
    const VertexId u = g.index_of(coords);
    if (g.contains(u)) out.push_back(u);
  }
  return out;
}

VertexId GenericGraph::add_vertex(std::string label) {
  if (adj_.size() >= 64)
    throw std::invalid_argument("GenericGraph: at most 64 vertices supported");
  adj_.push_back(0);
  labels_.push_back(std::move(label));
  return static_cast<VertexId>(adj_.size() - 1);
}

void GenericGraph::add_edge(VertexId a, VertexId b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("add_edge: loops not allowed");
  adj_[a] |= 1ull << b;
  adj_[b] |= 1ull << a;
}

void GenericGraph::add_edge(const std::string& a, const std::string& b) {
  add_edge(by_label(a), by_label(b));
}

std::vector<VertexId> GenericGraph::closed_neighborhood(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for_each_in_ball(v, [&](VertexId u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

bool GenericGraph::in_ball(VertexId center, VertexId v) const {
  if (!contains(center) || !contains(v)) return false;
  return center == v || (adj_[center] >> v) & 1;
}

std::string GenericGraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

VertexId GenericGraph::by_label(const std::string& label) const {
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) return v;
  throw std::invalid_argument("by_label: no vertex named '" + label + "'");
}

void GenericGraph::check_vertex(VertexId v) const {
  if (v >= adj_.size())
    throw std::invalid_argument("GenericGraph: vertex id out of range");
}

}  // namespace hamcode
