#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamcode/code.hpp"
#include "hamcode/graph.hpp"

namespace hamcode {

// Per-layer accounting for a code in K_q^3.  The layer fixing coordinate
// `axis` to `value` is a copy of K_q x K_q; rows fix the lower free axis,
// columns the higher one.
//   x_count: vertices of the layer with no covering codeword inside it
//   y_count: vertices whose only in-layer cover is themselves
//   a      : q - (codewords in layer)
//   min_dom_superset: size of a smallest dominating set of the layer that
//            contains all its codewords, |C| + (q - max(rows hit, cols hit))
//   f      : min_dom_superset - q
//   corners: in-layer corners, i.e. corner codewords with two in-layer
//            covers not sharing a pipe
struct LayerStats {
  int axis = 0;
  int value = 1;
  std::size_t codeword_count = 0;
  std::size_t x_count = 0;
  std::size_t y_count = 0;
  long long a = 0;
  std::size_t min_dom_superset = 0;
  long long f = 0;
  std::size_t corners = 0;
};

// corner: codeword outside Y (some two of its covers differ from it on
// different axes); fellow: in Y with another codeword adjacent; plain: in Y
// with no codeword neighbor
enum class CodewordRole { Corner, Fellow, Plain };

struct CodewordAnalysis {
  VertexId word = 0;
  CodewordRole role = CodewordRole::Plain;
  std::vector<std::pair<int, int>> layers_cornered;  // (axis, value)
};

struct LayerAnalysis {
  std::vector<LayerStats> layers;         // 3q entries, axis-major
  std::vector<CodewordAnalysis> roles;    // one per codeword, code order
  std::vector<VertexId> x_vertices;       // X, ascending
  std::vector<VertexId> y_vertices;       // Y, ascending
};

// Full layer accounting; requires the complete K_q^3 (n = 3, no removals).
LayerAnalysis layer_analysis(const Code& code);

struct LemmaCheck {
  std::string name;
  bool ok = false;
  std::string detail;  // failure description, empty when ok
};

struct LemmaReport {
  bool all_ok = false;
  std::vector<LemmaCheck> checks;
  LayerAnalysis analysis;
};

// Structural facts every identifying code of K_q^3 satisfies, checked
// exhaustively: pipe exclusion rules for fellows/corners/uncovered vertices,
// every uncovered-in-layer vertex is linked to a corner, |X| <= 3 * (corner
// count over layers) <= 6 * (f sum), 2 f >= corners per layer, and
// |X| >= sum (a+f)^2.  Rejects codes that are not identifying.
LemmaReport check_layer_lemmas(const Code& code);

// Lower bounds for codes in K_q^n.  The K_q^3-specific entries are present
// only when n = 3.
struct LowerBounds {
  int q = 0, n = 0;
  unsigned long long karpovsky = 0;          // ceil(2 q^n / (nq - n + 2)), identifying
  unsigned long long sid = 0;                // ceil(3 q^n / (n(q-1) + 1)), self-identifying
  std::optional<unsigned long long> id3_quadratic;  // ceil(q^2 - 3q/2)
  std::optional<unsigned long long> id3_sqrt;       // ceil(q^2 - q sqrt(q)), the older bound
  std::optional<unsigned long long> sld3;           // q^2, exact for SLD
  std::optional<unsigned long long> dom3;           // ceil(q^2 / 2), domination
};

LowerBounds lower_bounds(int q, int n);

// Compares the self-locating-dominating code of size q^(n-k) built from the
// tripled Hamming parity check (n = 3(q^k-1)/(q-1)) against the Karpovsky
// bound; the bound chain gives 3 * lower >= 2 * upper exactly.
struct RatioReport {
  int q = 0, k = 0, n = 0;
  unsigned long long upper = 0;     // q^(n-k)
  unsigned long long lower = 0;     // Karpovsky bound for K_q^n
  double ratio = 0.0;               // upper / lower
  bool chain_ok = false;            // 3 * lower >= 2 * upper
};

RatioReport ratio_report(int q, int k);

}  // namespace hamcode
