#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamcode/code.hpp"
#include "hamcode/field.hpp"
#include "hamcode/graph.hpp"

namespace hamcode {

// A word of F_q^n: n field elements, 0-based values
using Word = std::vector<int>;

struct ParityCheckMatrix {
  FiniteField field;
  int k = 0, n = 0;
  std::vector<int> entries;  // row-major k x n

  ParityCheckMatrix(FiniteField f, int rows, int cols)
      : field(std::move(f)), k(rows), n(cols),
        entries(static_cast<std::size_t>(rows) * cols, 0) {}

  int at(int row, int col) const { return entries[static_cast<std::size_t>(row) * n + col]; }
  void set(int row, int col, int v) { entries[static_cast<std::size_t>(row) * n + col] = v; }
};

// Parity check of the q-ary Hamming code of order k: the columns are the
// canonical representatives of the nonzero vectors of F_q^k (first nonzero
// entry 1), in ascending lexicographic order; n = (q^k - 1)/(q - 1).
ParityCheckMatrix hamming_parity_check(int q, int k);

bool in_kernel(const ParityCheckMatrix& h, const Word& u);

// All words u with H u^T = 0, lexicographically ascending.  q^(n - rank)
// words; refuses when that count exceeds the budget.
std::vector<Word> kernel_words(const ParityCheckMatrix& h, std::uint64_t budget = 1u << 22);

// The kernel as a code in K_q^n (coordinates shifted to 1-based).
Code code_from_parity_check(const ParityCheckMatrix& h);

int hamming_distance(const Word& a, const Word& b);
int min_distance(const std::vector<Word>& words);

// C ∪ (e1 + C) ∪ (e2 + C) for the q-ary Hamming code C of order k: a
// self-identifying code of size 3 q^(n-k) in F_q^n where every vertex has
// exactly three covers.  Needs n >= 2; checks e1, e2, e2 - e1 avoid C.
std::vector<Word> sid_coset_construction(int q, int k);

// {(c, t) : c in code, t in F_q}: appends one free coordinate; preserves
// the self-identifying property.
std::vector<Word> direct_sum_extend(const std::vector<Word>& code, const FiniteField& field);

// Kernel of the Hamming parity check with every column tripled and the
// first column repeated ell + 3 times in total: a self-locating-dominating
// code of size q^(n - k) in F_q^n, n = 3 n0 + ell, n0 = (q^k - 1)/(q - 1).
// Codewords cover only themselves; with ell = 0 every other vertex has
// exactly three covers, pairwise at distance 2.
std::vector<Word> sld_repeated_column(int q, int k, int ell);

// |N[c1] ∩ N[c2]| in K_q^n by direct enumeration.  Equals n(q-1)+1, q, 2, 0
// for distances 0, 1, 2, > 2.
std::size_t neighborhood_intersection_size(const HammingGraph& g, VertexId c1, VertexId c2);

// The unique common element of N[c1], N[c2], N[c3] when some pair is at
// distance 2 and the three closed neighborhoods share a vertex; errors if
// the intersection is not a singleton.
VertexId common_neighbor_of_three(const HammingGraph& g, VertexId c1, VertexId c2, VertexId c3);

// helpers between 0-based words and 1-based Hamming-graph vertices
Vertex word_to_vertex(const Word& w);
Word vertex_to_word(const Vertex& v);
Code code_from_words(int q, const std::vector<Word>& words);

}  // namespace hamcode
