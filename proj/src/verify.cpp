#include "hamcode/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "hamcode/code.hpp"

namespace hamcode {
namespace {

// Pairwise definition routes are quadratic; they run (as a cross-check) only
// when the graph has at most this many vertices.
constexpr VertexId kPairRouteBudget = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t hash_sorted(std::span<const VertexId> xs) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ xs.size();
  for (VertexId x : xs) h = splitmix64(h ^ x);
  return h;
}

// All I-sets packed into one arena, indexed by raw vertex id.  Removed ids
// get empty spans.
struct ISetArena {
  std::vector<std::uint32_t> start;
  std::vector<VertexId> data;

  std::span<const VertexId> of(VertexId v) const {
    return {data.data() + start[v], start[v + 1] - start[v]};
  }
};

template <class G>
ISetArena all_i_sets(const G& g, std::span<const VertexId> code) {
  std::vector<bool> member(g.index_limit(), false);
  for (VertexId c : code) member[c] = true;
  ISetArena t;
  t.start.assign(g.index_limit() + 1, 0);
  t.data.reserve(code.size() * 4 + 16);
  for (VertexId v = 0; v < g.index_limit(); ++v) {
    t.start[v] = static_cast<std::uint32_t>(t.data.size());
    if (!g.contains(v)) continue;
    const std::size_t base = t.data.size();
    g.for_each_in_ball(v, [&](VertexId u) {
      if (member[u]) t.data.push_back(u);
    });
    std::sort(t.data.begin() + static_cast<std::ptrdiff_t>(base), t.data.end());
  }
  t.start[g.index_limit()] = static_cast<std::uint32_t>(t.data.size());
  return t;
}

template <class G>
ISetStats stats_from(const G& g, std::span<const VertexId> code, const ISetArena& t) {
  std::vector<bool> member(g.index_limit(), false);
  for (VertexId c : code) member[c] = true;
  ISetStats s;
  bool first_all = true;
  g.for_each_vertex([&](VertexId v) {
    const std::size_t n = t.of(v).size();
    if (first_all) {
      s.min_all = s.max_all = n;
      first_all = false;
    } else {
      s.min_all = std::min(s.min_all, n);
      s.max_all = std::max(s.max_all, n);
    }
    if (!member[v]) {
      if (!s.has_noncode) {
        s.min_noncode = s.max_noncode = n;
        s.has_noncode = true;
      } else {
        s.min_noncode = std::min(s.min_noncode, n);
        s.max_noncode = std::max(s.max_noncode, n);
      }
    }
  });
  return s;
}

bool subset_of(std::span<const VertexId> a, std::span<const VertexId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class G>
std::string describe(const G& g, const Witness& w, std::span<const VertexId> iu) {
  std::ostringstream os;
  switch (w.kind) {
    case WitnessKind::None:
      break;
    case WitnessKind::EmptyCode:
      os << "empty code";
      break;
    case WitnessKind::Undominated:
      os << "I(" << g.label(w.u) << ") is empty";
      break;
    case WitnessKind::EqualISets:
      os << "I(" << g.label(w.u) << ") = I(" << g.label(w.v) << ")";
      break;
    case WitnessKind::ContainedISet:
      os << "I(" << g.label(w.u) << ") is contained in I(" << g.label(w.v) << ")";
      break;
    case WitnessKind::TooFewCovers:
      os << "only " << iu.size() << " codeword(s) cover " << g.label(w.u)
         << ", need at least 3";
      break;
    case WitnessKind::NoSpreadPair:
      os << "no two codewords covering " << g.label(w.u) << " are at distance 2";
      break;
  }
  return os.str();
}

template <class G>
std::string describe(const G& g, const Witness& w) {
  return describe(g, w, {});
}

// Does some present vertex other than u lie in every N[c], c in iu?
// Any such vertex x satisfies I(u) ⊆ I(x).
template <class G>
std::optional<VertexId> other_common_ball_vertex(const G& g, std::span<const VertexId> iu,
                                                 VertexId u) {
  std::optional<VertexId> hit;
  g.for_each_in_ball(iu.front(), [&](VertexId x) {
    if (hit || x == u) return;
    for (VertexId c : iu)
      if (!g.in_ball(c, x)) return;
    hit = x;
  });
  return hit;
}

// Shared body of the cover-intersection routes; skips codewords for SLD.
template <class G>
bool cover_intersection_route(const G& g, std::span<const VertexId> code, bool skip_codewords,
                              Witness* w) {
  const auto fail = [&](WitnessKind k, VertexId u, VertexId v) {
    if (w) *w = Witness{k, u, v};
    return false;
  };
  if (code.empty()) return fail(WitnessKind::EmptyCode, 0, 0);
  std::vector<bool> member(g.index_limit(), false);
  for (VertexId c : code) member[c] = true;
  std::vector<VertexId> iu;
  bool ok = true;
  Witness local;
  g.for_each_vertex([&](VertexId u) {
    if (!ok) return;
    if (skip_codewords && member[u]) return;
    iu.clear();
    g.for_each_in_ball(u, [&](VertexId x) {
      if (member[x]) iu.push_back(x);
    });
    if (iu.empty()) {
      local = Witness{WitnessKind::Undominated, u, 0};
      ok = false;
      return;
    }
    if (auto x = other_common_ball_vertex(g, iu, u)) {
      local = Witness{WitnessKind::ContainedISet, u, *x};
      ok = false;
    }
  });
  if (!ok && w) *w = local;
  return ok;
}

// Literal definition: for the selected u, every other present v leaves
// I(u) \ I(v) nonempty.  Quadratic; used on small graphs and in tests.
template <class G>
bool pair_exclusion_route(const G& g, std::span<const VertexId> code, bool skip_codewords,
                          Witness* w) {
  const auto fail = [&](WitnessKind k, VertexId u, VertexId v) {
    if (w) *w = Witness{k, u, v};
    return false;
  };
  if (code.empty()) return fail(WitnessKind::EmptyCode, 0, 0);
  std::vector<bool> member(g.index_limit(), false);
  for (VertexId c : code) member[c] = true;
  const ISetArena t = all_i_sets(g, code);
  bool ok = true;
  Witness local;
  g.for_each_vertex([&](VertexId u) {
    if (!ok) return;
    if (skip_codewords && member[u]) return;
    const auto iu = t.of(u);
    if (iu.empty() && g.vertex_count() > 1) {
      local = Witness{WitnessKind::Undominated, u, 0};
      ok = false;
      return;
    }
    g.for_each_vertex([&](VertexId v) {
      if (!ok || v == u) return;
      if (subset_of(iu, t.of(v))) {
        local = Witness{WitnessKind::ContainedISet, u, v};
        ok = false;
      }
    });
  });
  if (!ok && w) *w = local;
  return ok;
}

template <class G>
int hamming_distance(const G& g, VertexId a, VertexId b);

int hamming_distance(const HammingGraph& g, VertexId a, VertexId b) {
  int d = 0;
  for (int axis = 0; axis < g.n(); ++axis)
    if (g.coordinate(a, axis) != g.coordinate(b, axis)) ++d;
  return d;
}

}  // namespace

const char* property_name(Property p) {
  switch (p) {
    case Property::Dominating: return "dominating";
    case Property::Identifying: return "identifying";
    case Property::SelfIdentifying: return "self-identifying";
    case Property::SelfLocatingDominating: return "self-locating-dominating";
  }
  return "?";
}

template <class G>
VerificationReport is_dominating(const G& g, std::span<const VertexId> code) {
  VerificationReport r;
  r.property = Property::Dominating;
  if (code.empty()) {
    r.witness = Witness{WitnessKind::EmptyCode, 0, 0};
    r.detail = describe(g, r.witness);
    return r;
  }
  const ISetArena t = all_i_sets(g, code);
  r.stats = stats_from(g, code, t);
  bool ok = true;
  g.for_each_vertex([&](VertexId v) {
    if (ok && t.of(v).empty()) {
      r.witness = Witness{WitnessKind::Undominated, v, 0};
      ok = false;
    }
  });
  r.holds = ok;
  if (!ok) r.detail = describe(g, r.witness);
  return r;
}

template <class G>
VerificationReport is_identifying(const G& g, std::span<const VertexId> code) {
  VerificationReport r;
  r.property = Property::Identifying;
  if (code.empty()) {
    r.witness = Witness{WitnessKind::EmptyCode, 0, 0};
    r.detail = describe(g, r.witness);
    return r;
  }
  const ISetArena t = all_i_sets(g, code);
  r.stats = stats_from(g, code, t);
  bool ok = true;
  g.for_each_vertex([&](VertexId v) {
    if (ok && t.of(v).empty()) {
      r.witness = Witness{WitnessKind::Undominated, v, 0};
      ok = false;
    }
  });
  if (ok) {
    // fingerprint pass; only hash collisions get a real set comparison
    std::vector<std::pair<std::uint64_t, VertexId>> fp;
    fp.reserve(g.vertex_count());
    g.for_each_vertex([&](VertexId v) { fp.emplace_back(hash_sorted(t.of(v)), v); });
    std::sort(fp.begin(), fp.end());
    for (std::size_t i = 0; ok && i + 1 < fp.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < fp.size() && fp[j].first == fp[i].first; ++j) {
        const auto a = t.of(fp[i].second), b = t.of(fp[j].second);
        if (a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin())) {
          r.witness = Witness{WitnessKind::EqualISets, fp[i].second, fp[j].second};
          ok = false;
        }
      }
    }
  }
  r.holds = ok;
  if (!ok) r.detail = describe(g, r.witness);
  return r;
}

template <class G>
bool sid_by_pair_exclusion(const G& g, std::span<const VertexId> code, Witness* w) {
  return pair_exclusion_route(g, code, /*skip_codewords=*/false, w);
}

template <class G>
bool sid_by_cover_intersection(const G& g, std::span<const VertexId> code, Witness* w) {
  return cover_intersection_route(g, code, /*skip_codewords=*/false, w);
}

template <class G>
bool sld_by_pair_exclusion(const G& g, std::span<const VertexId> code, Witness* w) {
  return pair_exclusion_route(g, code, /*skip_codewords=*/true, w);
}

template <class G>
bool sld_by_cover_intersection(const G& g, std::span<const VertexId> code, Witness* w) {
  return cover_intersection_route(g, code, /*skip_codewords=*/true, w);
}

namespace {

template <class G>
VerificationReport exclusion_report(const G& g, std::span<const VertexId> code, Property prop) {
  const bool skip_codewords = prop == Property::SelfLocatingDominating;
  VerificationReport r;
  r.property = prop;
  Witness w;
  r.holds = cover_intersection_route(g, code, skip_codewords, &w);
  if (g.vertex_count() <= kPairRouteBudget) {
    const bool pairwise = pair_exclusion_route(g, code, skip_codewords, nullptr);
    if (pairwise != r.holds)
      throw std::logic_error(std::string("internal error: ") + property_name(prop) +
                             " routes disagree");
  }
  if (!r.holds) {
    r.witness = w;
    r.detail = describe(g, w);
  }
  const ISetArena t = all_i_sets(g, code);
  r.stats = stats_from(g, code, t);
  return r;
}

}  // namespace

template <class G>
VerificationReport is_self_identifying(const G& g, std::span<const VertexId> code) {
  return exclusion_report(g, code, Property::SelfIdentifying);
}

template <class G>
VerificationReport is_self_locating_dominating(const G& g, std::span<const VertexId> code) {
  return exclusion_report(g, code, Property::SelfLocatingDominating);
}

VerificationReport hamming_sid_sld_check(const HammingGraph& g, std::span<const VertexId> code,
                                         Property property) {
  if (property != Property::SelfIdentifying && property != Property::SelfLocatingDominating)
    throw std::invalid_argument("hamming_sid_sld_check: property must be SID or SLD");
  if (g.has_removals())
    throw std::invalid_argument("hamming_sid_sld_check: needs the full Hamming graph");
  const bool skip_codewords = property == Property::SelfLocatingDominating;
  VerificationReport r;
  r.property = property;
  if (code.empty()) {
    r.witness = Witness{WitnessKind::EmptyCode, 0, 0};
    r.detail = describe(g, r.witness);
    return r;
  }
  const ISetArena t = all_i_sets(g, code);
  r.stats = stats_from(g, code, t);
  std::vector<bool> member(g.index_limit(), false);
  for (VertexId c : code) member[c] = true;
  bool ok = true;
  g.for_each_vertex([&](VertexId u) {
    if (!ok) return;
    if (skip_codewords && member[u]) return;
    const auto iu = t.of(u);
    if (iu.size() < 3) {
      r.witness = Witness{WitnessKind::TooFewCovers, u, 0};
      r.detail = describe(g, r.witness, iu);
      ok = false;
      return;
    }
    for (std::size_t i = 0; i < iu.size(); ++i)
      for (std::size_t j = i + 1; j < iu.size(); ++j)
        if (hamming_distance(g, iu[i], iu[j]) == 2) return;
    r.witness = Witness{WitnessKind::NoSpreadPair, u, 0};
    r.detail = describe(g, r.witness, iu);
    ok = false;
  });
  r.holds = ok;
  return r;
}

TripleCoverInfo triple_cover_structure(const HammingGraph& g, std::span<const VertexId> code,
                                       VertexId v) {
  if (g.n() != 3) throw std::invalid_argument("triple_cover_structure: graph must be K_q^3");
  if (!g.contains(v)) throw std::invalid_argument("triple_cover_structure: vertex not in graph");
  TripleCoverInfo info;
  info.covers = i_set(g, code, v);
  const auto& is = info.covers;
  if (is.empty()) {
    info.kind = TripleCoverInfo::Kind::Empty;
    return info;
  }
  if (is.size() == 1) {
    info.kind = TripleCoverInfo::Kind::Singleton;
    return info;
  }
  // all covers inside one pipe <=> they agree on both coordinates off some axis
  for (int axis = 0; axis < 3 && info.kind == TripleCoverInfo::Kind::Empty; ++axis) {
    bool same_line = true;
    for (VertexId c : is) {
      for (int other = 0; other < 3; ++other)
        if (other != axis && g.coordinate(c, other) != g.coordinate(is[0], other)) {
          same_line = false;
          break;
        }
      if (!same_line) break;
    }
    if (same_line) info.kind = TripleCoverInfo::Kind::WithinPipe;
  }
  if (info.kind == TripleCoverInfo::Kind::WithinPipe) {
    // the pipe holding the covers is a clique, so I(v) ⊆ I(c) for any cover c
    info.pipe_codeword = is[0];
    return info;
  }
  if (is.size() >= 3) {
    info.kind = TripleCoverInfo::Kind::Pinned;
    return info;
  }
  // two covers in different pipes: both differ from v in exactly one
  // coordinate, on distinct axes, so exactly one other vertex sees both
  info.kind = TripleCoverInfo::Kind::PairSplit;
  g.for_each_in_ball(is[0], [&](VertexId x) {
    if (x == v || !g.in_ball(is[1], x)) return;
    if (info.partner)
      throw std::logic_error("triple_cover_structure: distance-2 covers with 3 common neighbors");
    info.partner = x;
  });
  return info;
}

template VerificationReport is_dominating<HammingGraph>(const HammingGraph&,
                                                        std::span<const VertexId>);
template VerificationReport is_dominating<GenericGraph>(const GenericGraph&,
                                                        std::span<const VertexId>);
template VerificationReport is_identifying<HammingGraph>(const HammingGraph&,
                                                         std::span<const VertexId>);
template VerificationReport is_identifying<GenericGraph>(const GenericGraph&,
                                                         std::span<const VertexId>);
template VerificationReport is_self_identifying<HammingGraph>(const HammingGraph&,
                                                              std::span<const VertexId>);
template VerificationReport is_self_identifying<GenericGraph>(const GenericGraph&,
                                                              std::span<const VertexId>);
template VerificationReport is_self_locating_dominating<HammingGraph>(const HammingGraph&,
                                                                      std::span<const VertexId>);
template VerificationReport is_self_locating_dominating<GenericGraph>(const GenericGraph&,
                                                                      std::span<const VertexId>);
template bool sid_by_pair_exclusion<HammingGraph>(const HammingGraph&, std::span<const VertexId>,
                                                  Witness*);
template bool sid_by_pair_exclusion<GenericGraph>(const GenericGraph&, std::span<const VertexId>,
                                                  Witness*);
template bool sid_by_cover_intersection<HammingGraph>(const HammingGraph&,
                                                      std::span<const VertexId>, Witness*);
template bool sid_by_cover_intersection<GenericGraph>(const GenericGraph&,
                                                      std::span<const VertexId>, Witness*);
template bool sld_by_pair_exclusion<HammingGraph>(const HammingGraph&, std::span<const VertexId>,
                                                  Witness*);
template bool sld_by_pair_exclusion<GenericGraph>(const GenericGraph&, std::span<const VertexId>,
                                                  Witness*);
template bool sld_by_cover_intersection<HammingGraph>(const HammingGraph&,
                                                      std::span<const VertexId>, Witness*);
template bool sld_by_cover_intersection<GenericGraph>(const GenericGraph&,
                                                      std::span<const VertexId>, Witness*);

}  // namespace hamcode
