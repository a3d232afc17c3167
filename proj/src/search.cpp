#include "hamcode/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hamcode/errors.hpp"

namespace hamcode {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

template <class G>
VerificationReport verify_property(const G& g, Property p, std::span<const VertexId> code) {
  switch (p) {
    case Property::Dominating: return is_dominating(g, code);
    case Property::Identifying: return is_identifying(g, code);
    case Property::SelfIdentifying: return is_self_identifying(g, code);
    case Property::SelfLocatingDominating: return is_self_locating_dominating(g, code);
  }
  throw std::logic_error("verify_property: bad property");
}

template <class G>
bool allows_reduction(const G&) {
  return false;
}

bool allows_reduction(const HammingGraph& g) { return !g.has_removals(); }

// Depth-first decision search over the present vertices in ascending id
// order.  Position p decided means membership of verts[0..p) is fixed; a
// vertex finalizes once every vertex of its ball is decided, at which point
// its I-set can never change again.
template <class G>
class Searcher {
 public:
  Searcher(const G& g, const SearchProblem& prob) : g_(g), prob_(prob) {
    g_.for_each_vertex([&](VertexId v) { verts_.push_back(v); });
    const std::size_t nv = verts_.size();
    rank_.assign(g_.index_limit(), 0);
    for (std::size_t i = 0; i < nv; ++i) rank_[verts_[i]] = static_cast<VertexId>(i);
    ball_.resize(nv);
    finalize_at_.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      g_.for_each_in_ball(verts_[i], [&](VertexId u) { ball_[i].push_back(rank_[u]); });
      std::sort(ball_[i].begin(), ball_[i].end());
      const VertexId last = ball_[i].empty() ? static_cast<VertexId>(i) : ball_[i].back();
      finalize_at_[last].push_back(static_cast<VertexId>(i));
    }
    chosen_mask_.assign(nv, 0);
    cover_.assign(nv, 0);
  }

  SearchOutcome run() {
    SearchOutcome out;
    const std::size_t nv = verts_.size();
    if (prob_.size > nv) {
      out.nodes = nodes_;
      return out;
    }
    if (prob_.symmetry_reduction && allows_reduction(g_) && prob_.size >= 1) {
      decide_in(0);
      if (!finalize_after(0)) {
        // first vertex alone already contradicts: only possible for size 1
        undo_finalize(0);
        undo_in(0);
        out.nodes = nodes_;
        return out;
      }
      dfs(1);
      undo_finalize(0);
      undo_in(0);
    } else {
      dfs(0);
    }
    out.found = found_;
    out.nodes = nodes_;
    out.witness = witness_;
    return out;
  }

 private:
  void decide_in(std::size_t pos) {
    chosen_mask_[pos] = 1;
    ++chosen_;
    for (VertexId b : ball_[pos]) ++cover_[b];
  }

  void undo_in(std::size_t pos) {
    chosen_mask_[pos] = 0;
    --chosen_;
    for (VertexId b : ball_[pos]) --cover_[b];
  }

  // final I-set of a finalized vertex, by rank list
  std::vector<VertexId> final_iset(VertexId v) const {
    std::vector<VertexId> is;
    for (VertexId b : ball_[v])
      if (chosen_mask_[b]) is.push_back(b);
    return is;
  }

  bool iset_equal(VertexId a, VertexId b) const {
    return final_iset(a) == final_iset(b);
  }

  // Applies the property's pruning rules to vertex v whose I-set just became
  // final; records it for later collision checks.  Returns false to prune.
  bool admit_final(VertexId v) {
    // a vertex covers itself, so cover 0 implies v is not a codeword and its
    // I-set is empty for good; every property forbids that
    if (cover_[v] == 0) return false;
    if (prob_.property == Property::Dominating) return true;
    const auto is = final_iset(v);
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ is.size();
    for (VertexId x : is) h = splitmix64(h ^ x);
    const auto range = finals_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it) {
      const VertexId other = it->second;
      if (!iset_equal(v, other)) continue;
      switch (prob_.property) {
        case Property::Identifying:
        case Property::SelfIdentifying:
          return false;
        case Property::SelfLocatingDominating:
          if (!chosen_mask_[v] || !chosen_mask_[other]) return false;
          break;
        default:
          break;
      }
    }
    finals_.emplace(h, v);
    trail_.emplace_back(h, v);
    return true;
  }

  // Finalizes everything whose ball closes at pos.  Returns false if any
  // newly final vertex violates the pruning rules; the caller must still
  // undo_finalize(pos) afterwards.
  bool finalize_after(std::size_t pos) {
    marks_.push_back(trail_.size());
    for (VertexId v : finalize_at_[pos])
      if (!admit_final(v)) return false;
    return true;
  }

  void undo_finalize(std::size_t) {
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark) {
      const auto [h, v] = trail_.back();
      trail_.pop_back();
      const auto range = finals_.equal_range(h);
      for (auto it = range.first; it != range.second; ++it)
        if (it->second == v) {
          finals_.erase(it);
          break;
        }
    }
  }

  // full verification once every vertex is decided; on success the witness
  // is captured here, before the unwinding resets the membership mask
  bool accept_full() {
    for (std::size_t i = 0; i < verts_.size(); ++i)
      if (cover_[i] == 0) return false;
    std::vector<VertexId> code;
    for (std::size_t i = 0; i < verts_.size(); ++i)
      if (chosen_mask_[i]) code.push_back(verts_[i]);
    if (!verify_property(g_, prob_.property, code).holds) return false;
    witness_ = std::move(code);
    return true;
  }

  void dfs(std::size_t pos) {
    if (found_) return;
    if (++nodes_ > prob_.node_budget)
      throw BudgetError("exists_code: node budget exhausted");
    const std::size_t nv = verts_.size();
    const std::size_t left = prob_.size - chosen_;
    if (left == 0 || nv - pos == left) {
      // remaining decisions forced; fill and verify outright
      std::vector<std::size_t> forced;
      if (left > 0)
        for (std::size_t p = pos; p < nv; ++p) {
          decide_in(p);
          forced.push_back(p);
        }
      if (accept_full()) found_ = true;
      for (auto it = forced.rbegin(); it != forced.rend(); ++it) undo_in(*it);
      return;
    }
    if (nv - pos < left) return;

    decide_in(pos);
    if (finalize_after(pos)) dfs(pos + 1);
    undo_finalize(pos);
    undo_in(pos);
    if (found_) return;

    if (finalize_after(pos)) dfs(pos + 1);
    undo_finalize(pos);
  }

  const G& g_;
  SearchProblem prob_;
  std::vector<VertexId> verts_;
  std::vector<VertexId> rank_;
  std::vector<std::vector<VertexId>> ball_;         // by rank, sorted
  std::vector<std::vector<VertexId>> finalize_at_;  // ranks finalizing at position
  std::vector<char> chosen_mask_;
  std::vector<std::uint32_t> cover_;
  std::unordered_multimap<std::uint64_t, VertexId> finals_;
  std::vector<std::pair<std::uint64_t, VertexId>> trail_;
  std::vector<std::size_t> marks_;
  std::vector<VertexId> witness_;
  std::size_t chosen_ = 0;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
};

}  // namespace

template <class G>
SearchOutcome exists_code(const G& g, const SearchProblem& problem) {
  if (problem.size < 1) throw std::invalid_argument("exists_code: size must be >= 1");
  if (g.vertex_count() == 0) throw std::invalid_argument("exists_code: empty graph");
  Searcher<G> s(g, problem);
  return s.run();
}

template <class G>
OptimalResult optimal_size(const G& g, Property property, std::size_t start,
                           bool symmetry_reduction, std::uint64_t node_budget) {
  OptimalResult out;
  SearchProblem p;
  p.property = property;
  p.symmetry_reduction = symmetry_reduction;
  for (std::size_t s = std::max<std::size_t>(start, 1); s <= g.vertex_count(); ++s) {
    p.size = s;
    if (out.nodes >= node_budget) throw BudgetError("optimal_size: node budget exhausted");
    p.node_budget = node_budget - out.nodes;
    const SearchOutcome o = exists_code(g, p);
    out.nodes += o.nodes;
    if (o.found) {
      out.size = s;
      out.witness = o.witness;
      return out;
    }
  }
  throw std::invalid_argument("optimal_size: no code of any size satisfies the property");
}

template SearchOutcome exists_code<HammingGraph>(const HammingGraph&, const SearchProblem&);
template SearchOutcome exists_code<GenericGraph>(const GenericGraph&, const SearchProblem&);
template OptimalResult optimal_size<HammingGraph>(const HammingGraph&, Property, std::size_t,
                                                  bool, std::uint64_t);
template OptimalResult optimal_size<GenericGraph>(const GenericGraph&, Property, std::size_t,
                                                  bool, std::uint64_t);

}  // namespace hamcode
