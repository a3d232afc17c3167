#include "hamcode/latin.hpp"

#include <stdexcept>
#include <string>

namespace hamcode {
namespace {

// Kuhn's augmenting-path matching on a bipartite graph given as adjacency
// lists (left -> right candidates, both 0-based).  Left vertices are
// processed in order and candidates tried in list order, so the result is
// deterministic.  Returns match_left (size nl) or throws if no perfect
// matching exists.
std::vector<int> perfect_matching(int nl, int nr, const std::vector<std::vector<int>>& adj) {
  std::vector<int> match_left(nl, -1), match_right(nr, -1);
  std::vector<char> seen(nr, 0);
  auto augment = [&](auto&& self, int l) -> bool {
    for (int r : adj[l]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (match_right[r] == -1 || self(self, match_right[r])) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < nl; ++l) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(augment, l))
      throw std::logic_error("perfect_matching: no perfect matching");
  }
  return match_left;
}

}  // namespace

bool PartialLatinSquare::consistent() const {
  for (int x = 1; x <= order; ++x) {
    std::vector<char> seen(order + 1, 0);
    for (int y = 1; y <= order; ++y) {
      const int z = at(x, y);
      if (z == 0) continue;
      if (z < 0 || z > order || seen[z]) return false;
      seen[z] = 1;
    }
  }
  for (int y = 1; y <= order; ++y) {
    std::vector<char> seen(order + 1, 0);
    for (int x = 1; x <= order; ++x) {
      const int z = at(x, y);
      if (z == 0) continue;
      if (z < 0 || z > order || seen[z]) return false;
      seen[z] = 1;
    }
  }
  return true;
}

bool validate_latin(const LatinSquare& sq) {
  if (sq.order < 1 || sq.cells.size() != static_cast<std::size_t>(sq.order) * sq.order)
    return false;
  for (int z : sq.cells)
    if (z < 1 || z > sq.order) return false;
  PartialLatinSquare p(sq.order);
  p.cells = sq.cells;
  return p.consistent();
}

LatinSquare cyclic_latin(int q) {
  if (q < 1) throw std::invalid_argument("cyclic_latin: order must be >= 1");
  LatinSquare sq(q);
  for (int a = 1; a <= q; ++a)
    for (int b = 1; b <= q; ++b) {
      int c = (-(a + b)) % q;
      if (c < 0) c += q;          // representative in 0..q-1
      sq.set(a, b, c == 0 ? q : c);  // value q stands for residue 0
    }
  return sq;
}

Code latin_to_code(const LatinSquare& sq) {
  if (!validate_latin(sq)) throw std::invalid_argument("latin_to_code: not a Latin square");
  HammingGraph g(sq.order, 3);
  std::vector<VertexId> words;
  words.reserve(static_cast<std::size_t>(sq.order) * sq.order);
  for (int x = 1; x <= sq.order; ++x)
    for (int y = 1; y <= sq.order; ++y)
      words.push_back(g.index_of({x, y, sq.at(x, y)}));
  return Code(std::move(g), std::move(words));
}

LatinSquare code_to_latin(const Code& code) {
  const HammingGraph& g = code.graph;
  if (g.n() != 3) throw std::invalid_argument("code_to_latin: graph must be K_q^3");
  if (g.has_removals()) throw std::invalid_argument("code_to_latin: graph must be complete");
  LatinSquare sq(g.q());
  for (VertexId w : code.words) {
    const int x = g.coordinate(w, 0), y = g.coordinate(w, 1), z = g.coordinate(w, 2);
    if (sq.at(x, y) != 0)
      throw std::invalid_argument("code_to_latin: two codewords in tower (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
    sq.set(x, y, z);
  }
  for (int x = 1; x <= g.q(); ++x)
    for (int y = 1; y <= g.q(); ++y)
      if (sq.at(x, y) == 0)
        throw std::invalid_argument("code_to_latin: tower (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") has no codeword");
  return sq;
}

LatinSquare extend_latin(const LatinSquare& sq, int r) {
  if (!validate_latin(sq)) throw std::invalid_argument("extend_latin: not a Latin square");
  const int q = sq.order;
  if (r < 2 * q)
    throw std::invalid_argument("extend_latin: target order must be at least 2x the original");

  PartialLatinSquare p(r);
  for (int x = 1; x <= q; ++x)
    for (int y = 1; y <= q; ++y) p.set(x, y, sq.at(x, y));

  // Rectangle phase: row x of the original block already holds 1..q, so its
  // new cells take each of q+1..r exactly once.  Match new columns against
  // new values; both sides have r-q-(x-1) remaining options per vertex.
  const int extra = r - q;
  for (int x = 1; x <= q; ++x) {
    std::vector<std::vector<int>> adj(extra);
    for (int cy = 0; cy < extra; ++cy) {
      const int y = q + 1 + cy;
      for (int cz = 0; cz < extra; ++cz) {
        const int z = q + 1 + cz;
        bool used = false;
        for (int xx = 1; xx < x; ++xx)
          if (p.at(xx, y) == z) {
            used = true;
            break;
          }
        if (!used) adj[cy].push_back(cz);
      }
    }
    const auto match = perfect_matching(extra, extra, adj);
    for (int cy = 0; cy < extra; ++cy) p.set(x, q + 1 + cy, q + 1 + match[cy]);
  }

  // Completion phase: with x-1 full rows done, every column misses r-x+1
  // values and every value misses r-x+1 columns, again a regular matching.
  for (int x = q + 1; x <= r; ++x) {
    std::vector<std::vector<int>> adj(r);
    for (int cy = 0; cy < r; ++cy) {
      const int y = cy + 1;
      std::vector<char> in_col(r + 1, 0);
      for (int xx = 1; xx < x; ++xx) in_col[p.at(xx, y)] = 1;
      for (int z = 1; z <= r; ++z)
        if (!in_col[z]) adj[cy].push_back(z - 1);
    }
    const auto match = perfect_matching(r, r, adj);
    for (int cy = 0; cy < r; ++cy) p.set(x, cy + 1, match[cy] + 1);
  }

  LatinSquare out(r);
  out.cells = p.cells;
  if (!validate_latin(out)) throw std::logic_error("extend_latin: produced invalid square");
  return out;
}

}  // namespace hamcode
