#pragma once

#include <array>

#include "hamcode/code.hpp"
#include "hamcode/graph.hpp"

namespace hamcode {

// Vertices of K_{qm}^3 seen as six-tuples (x,y,z,a,b,c): an inner K_q^3
// coordinate (x,y,z) plus an outer K_m^3 coordinate (a,b,c), glued per axis
// as value = inner + q*(outer-1).  flatten/split are mutually inverse.
struct SextupleView {
  int q = 1, m = 1;

  SextupleView(int inner_q, int outer_m);

  Vertex flatten(const std::array<int, 6>& s) const;
  std::array<int, 6> split(const Vertex& v) const;
};

// {(a,b,c) : a+b+c ≡ 0 (mod q)}: q^2 codewords, one per pipe; identifying
// (and self-locating-dominating) in K_q^3 for q >= 3
Code construct_cq(int q);

// a 15-word identifying code in K_4^3, one codeword below the q^2 mark
Code construct_c1();

// a 12-word code in K_4^3, identifying in the graph minus the diagonal;
// every codeword covers itself only, no codeword touches the diagonal
Code construct_cl();

// {(j,j,j) : 1 <= j <= q}
std::vector<Vertex> diagonal(int q);

// Ext: pair every inner codeword with every outer codeword and flatten;
// |Ext| = |inner| * |outer|, ambient K_{qm}^3
Code ext(const Code& inner, const Code& outer);

// Recursive identifying codes in K_q^3 for q = 4^t of size q^2 - q/4:
// the 15-word code for t = 1, then Ext(C_{q/4}, 12-word code) together with
// Ext(previous level, diagonal).
Code construct_ct(int t);

// Grows an identifying code of K_q^3 to one of K_r^3 (r >= 2q) by adding all
// cells of an extended cyclic Latin square outside the original q x q block;
// adds r^2 - q^2 codewords.
Code extend_identifying(const Code& code, int r);

// Smallest known identifying code size in K_q^3: q^2 - q/4 at q = 4^t,
// q^2 - 4^(t-1) for 2*4^t <= q <= 2*4^(t+1) - 1, else q^2.
long long best_known_upper(int q);

}  // namespace hamcode
