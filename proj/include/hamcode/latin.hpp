#pragma once

#include <vector>

#include "hamcode/code.hpp"
#include "hamcode/graph.hpp"

namespace hamcode {

// Latin square of the given order: grid(x,y) in 1..order, x,y 1-based, no
// value repeated in any row x = const or column y = const.
struct LatinSquare {
  int order = 0;
  std::vector<int> cells;  // (x-1)*order + (y-1)

  LatinSquare() = default;
  explicit LatinSquare(int n) : order(n), cells(static_cast<std::size_t>(n) * n, 0) {}

  int at(int x, int y) const { return cells[idx(x, y)]; }
  void set(int x, int y, int z) { cells[idx(x, y)] = z; }

  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x - 1) * order + (y - 1);
  }
};

// Partially filled square: 0 marks an empty cell.  Rows and columns must not
// repeat a filled value; used as working state while extending.
struct PartialLatinSquare {
  int order = 0;
  std::vector<int> cells;

  explicit PartialLatinSquare(int n) : order(n), cells(static_cast<std::size_t>(n) * n, 0) {}

  int at(int x, int y) const { return cells[idx(x, y)]; }
  void set(int x, int y, int z) { cells[idx(x, y)] = z; }
  bool filled(int x, int y) const { return at(x, y) != 0; }

  bool consistent() const;  // no filled value repeats in a row or column

  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x - 1) * order + (y - 1);
  }
};

// true iff every cell is in 1..order and no row or column repeats a value
bool validate_latin(const LatinSquare& sq);

// grid(a,b) = the unique c with a+b+c ≡ 0 (mod q)
LatinSquare cyclic_latin(int q);

// {(x,y,z) : grid(x,y) = z} as a code in K_q^3.  Always self-locating-
// dominating of size q^2; conversely every SLD code of size q^2 in K_q^3
// has exactly one codeword per tower and arises this way.
Code latin_to_code(const LatinSquare& sq);

// inverse of latin_to_code; rejects codes that are not one-per-tower
LatinSquare code_to_latin(const Code& code);

// Embeds sq (order q) into a Latin square of order r >= 2q: the top-left
// q x q block equals sq and values q+1..r appear only outside that block.
// Built column-block first (each of the first q rows gets the new values by
// a perfect matching against the new columns), then completed row by row,
// again by perfect matchings; every matching problem here is on a regular
// bipartite graph, so a perfect matching always exists.  Deterministic:
// augmenting paths try lowest indices first.
LatinSquare extend_latin(const LatinSquare& sq, int r);

}  // namespace hamcode
