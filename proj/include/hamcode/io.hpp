#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hamcode/code.hpp"
#include "hamcode/graph.hpp"
#include "hamcode/latin.hpp"
#include "hamcode/linear.hpp"

namespace hamcode {

// Coordinate convention used by a code file.  K mode stores 1-based
// coordinates in 1..q, F mode stores 0-based coordinates in 0..q-1 and is
// flagged inside the file by a "# mode: f" comment line.  In memory all
// coordinates are 1-based regardless of the file mode.
enum class CoordMode { K, F };

// Parsed contents of a code file: header "q n", one codeword per line,
// comment lines starting with '#'.
struct CodeFile {
  int q = 0;
  int n = 0;
  CoordMode mode = CoordMode::K;
  std::vector<Vertex> words;  // 1-based
};

CodeFile read_code_file(std::istream& in);
CodeFile read_code_file(const std::string& path);

// Writes the shared code format; a nonempty comment is emitted first as
// '#'-prefixed lines.  F mode subtracts one from every coordinate and adds
// the mode marker.
void write_code_file(std::ostream& out, const HammingGraph& graph,
                     std::span<const VertexId> words, CoordMode mode = CoordMode::K,
                     const std::string& comment = "");
void write_code_file(const std::string& path, const HammingGraph& graph,
                     std::span<const VertexId> words, CoordMode mode = CoordMode::K,
                     const std::string& comment = "");

// Latin square format: first line "q", then q lines of q entries; line x
// holds row x of the grid, so the value at (x, y) is the y-th entry.
LatinSquare read_latin_file(std::istream& in);
LatinSquare read_latin_file(const std::string& path);
void write_latin_file(std::ostream& out, const LatinSquare& square);
void write_latin_file(const std::string& path, const LatinSquare& square);

// Parity-check matrix format: first line "q k n", then k rows of n field
// elements encoded as integers in 0..q-1.
ParityCheckMatrix read_parity_check_file(std::istream& in);
ParityCheckMatrix read_parity_check_file(const std::string& path);
void write_parity_check_file(std::ostream& out, const ParityCheckMatrix& h);
void write_parity_check_file(const std::string& path, const ParityCheckMatrix& h);

// Edge-list format for small explicit graphs: each line names two vertex
// labels joined by an edge; a line with a single label declares an isolated
// vertex.  Vertices are numbered in order of first appearance.
GenericGraph read_generic_graph_file(std::istream& in);
GenericGraph read_generic_graph_file(const std::string& path);

}  // namespace hamcode
