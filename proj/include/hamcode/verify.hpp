#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamcode/graph.hpp"

namespace hamcode {

enum class Property { Dominating, Identifying, SelfIdentifying, SelfLocatingDominating };

const char* property_name(Property p);

enum class WitnessKind {
  None,
  EmptyCode,      // no codewords at all
  Undominated,    // I(u) empty
  EqualISets,     // I(u) == I(v), u != v
  ContainedISet,  // I(u) ⊆ I(v), u != v
  TooFewCovers,   // |I(u)| < 3 where the cover characterization needs >= 3
  NoSpreadPair,   // no two covers of u at Hamming distance exactly 2
};

struct Witness {
  WitnessKind kind = WitnessKind::None;
  VertexId u = 0;
  VertexId v = 0;
};

// I-set size range over all present vertices, and separately over the
// present non-codewords (meaningful for locating/covering claims).
struct ISetStats {
  std::size_t min_all = 0, max_all = 0;
  std::size_t min_noncode = 0, max_noncode = 0;
  bool has_noncode = false;
};

struct VerificationReport {
  Property property = Property::Dominating;
  bool holds = false;
  Witness witness;
  ISetStats stats;
  std::string detail;  // human-readable witness description, empty when holds
};

// Every vertex is dominated: I(v) nonempty for all present v.
template <class G>
VerificationReport is_dominating(const G& g, std::span<const VertexId> code);

// Dominating and all I-sets pairwise distinct.
template <class G>
VerificationReport is_identifying(const G& g, std::span<const VertexId> code);

// For all distinct u,v: I(u) \ I(v) nonempty.  Evaluated through the
// equivalent cover-intersection condition (I(u) nonempty and the closed
// neighborhoods of I(u) intersect exactly in u); on small graphs the
// pairwise definition is evaluated as well and the two routes must agree.
template <class G>
VerificationReport is_self_identifying(const G& g, std::span<const VertexId> code);

// Same exclusion condition restricted to non-codewords u.
template <class G>
VerificationReport is_self_locating_dominating(const G& g, std::span<const VertexId> code);

// Definition-route checks, exposed so equivalences can be tested directly.
// Pairwise routes are quadratic in the vertex count; the intersection routes
// are near-linear and are what the main verifiers use.
template <class G>
bool sid_by_pair_exclusion(const G& g, std::span<const VertexId> code, Witness* w = nullptr);
template <class G>
bool sid_by_cover_intersection(const G& g, std::span<const VertexId> code, Witness* w = nullptr);
template <class G>
bool sld_by_pair_exclusion(const G& g, std::span<const VertexId> code, Witness* w = nullptr);
template <class G>
bool sld_by_cover_intersection(const G& g, std::span<const VertexId> code, Witness* w = nullptr);

// Hamming-space characterization of SID/SLD for full K_q^n (no removals):
// every vertex (SID) resp. every non-codeword (SLD) has at least three covers,
// two of them at Hamming distance exactly 2.  Rejects other properties and
// graphs with removed vertices.
VerificationReport hamming_sid_sld_check(const HammingGraph& g, std::span<const VertexId> code,
                                         Property property);

// How the covers of a single vertex of K_q^3 pin it down.
struct TripleCoverInfo {
  enum class Kind {
    Empty,      // no covers
    Singleton,  // one cover
    WithinPipe, // >= 2 covers, all inside one pipe; I(v) ⊆ I(pipe_codeword)
    PairSplit,  // exactly 2 covers in different pipes; one other vertex shares both
    Pinned,     // >= 3 covers not all in one pipe; no other I-set contains I(v)
  };
  Kind kind = Kind::Empty;
  std::vector<VertexId> covers;           // I(v), ascending
  std::optional<VertexId> partner;        // PairSplit: the unique other vertex with both covers
  std::optional<VertexId> pipe_codeword;  // WithinPipe: witness codeword c with I(v) ⊆ I(c)
};

TripleCoverInfo triple_cover_structure(const HammingGraph& g, std::span<const VertexId> code,
                                       VertexId v);

}  // namespace hamcode
