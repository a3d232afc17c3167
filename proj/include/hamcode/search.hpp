#pragma once

#include <cstdint>
#include <vector>

#include "hamcode/graph.hpp"
#include "hamcode/verify.hpp"

namespace hamcode {

// Exhaustive search for a code of a given exact size with a given property.
// Vertices are decided in ascending id order; partial assignments are pruned
// when some fully-decided vertex is uncovered, or when two fully-decided
// vertices violate the property's I-set separation (equal I-sets for
// identifying and self-identifying codes, equal with a non-codeword involved
// for self-locating-domination).  Any witness found is re-verified before it
// is returned.  Since all four properties survive adding codewords, a size-s
// hit exists iff some code of size at most s works.
struct SearchProblem {
  Property property = Property::Identifying;
  std::size_t size = 1;
  // restrict to codes containing the first vertex; sound for graphs whose
  // automorphisms act transitively on vertices, so it is applied only to
  // complete Hamming graphs and ignored elsewhere
  bool symmetry_reduction = false;
  std::uint64_t node_budget = 100'000'000;  // throws BudgetError beyond this
};

struct SearchOutcome {
  bool found = false;
  std::vector<VertexId> witness;  // lexicographically least found, sorted
  std::uint64_t nodes = 0;
};

template <class G>
SearchOutcome exists_code(const G& g, const SearchProblem& problem);

struct OptimalResult {
  std::size_t size = 0;
  std::vector<VertexId> witness;
  std::uint64_t nodes = 0;
};

// Smallest size with a hit, scanning upward from `start`; relies on the
// superset-closure above.  Throws BudgetError if the combined node count
// passes the budget, and std::invalid_argument if even size |V| fails.
template <class G>
OptimalResult optimal_size(const G& g, Property property, std::size_t start = 1,
                           bool symmetry_reduction = false,
                           std::uint64_t node_budget = 100'000'000);

}  // namespace hamcode
