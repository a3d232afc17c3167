#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "hamcode/graph.hpp"

namespace hamcode {

// A code in a Hamming graph: the ambient graph plus a sorted duplicate-free
// list of codeword ids.  Vertex-set semantics; construction validates that
// every word is present in the graph.
struct Code {
  HammingGraph graph;
  std::vector<VertexId> words;

  Code(HammingGraph g, std::vector<VertexId> ws) : graph(std::move(g)), words(std::move(ws)) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (VertexId w : words)
      if (!graph.contains(w)) throw std::invalid_argument("Code: word not in graph");
  }

  static Code of(HammingGraph g, const std::vector<Vertex>& vs) {
    std::vector<VertexId> ws;
    ws.reserve(vs.size());
    for (const Vertex& v : vs) ws.push_back(g.index_of(v));
    return Code(std::move(g), std::move(ws));
  }

  std::size_t size() const { return words.size(); }

  bool contains(VertexId v) const {
    return std::binary_search(words.begin(), words.end(), v);
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(words.size());
    for (VertexId w : words) out.push_back(graph.vertex_at(w));
    return out;
  }
};

// I(v) = N[v] ∩ C for a sorted codeword list, ascending ids.
template <class G>
std::vector<VertexId> i_set(const G& g, std::span<const VertexId> code, VertexId v) {
  std::vector<VertexId> out;
  g.for_each_in_ball(v, [&](VertexId u) {
    if (std::binary_search(code.begin(), code.end(), u)) out.push_back(u);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// I(U) = union of I(v) over v in U, ascending ids.
template <class G>
std::vector<VertexId> i_set_of_set(const G& g, std::span<const VertexId> code,
                                   std::span<const VertexId> vs) {
  std::vector<VertexId> out;
  for (VertexId v : vs) {
    auto one = i_set(g, code, v);
    out.insert(out.end(), one.begin(), one.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<VertexId> i_set(const Code& c, VertexId v) {
  return i_set(c.graph, std::span<const VertexId>(c.words), v);
}

}  // namespace hamcode
