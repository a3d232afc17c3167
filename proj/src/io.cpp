#include "hamcode/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hamcode/field.hpp"

namespace hamcode {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  std::ostringstream os;
  os << "line " << line_no << ": " << what;
  throw std::runtime_error(os.str());
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Reads lines, strips comments and blanks, and reports mode markers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // next content line, or false at end of input
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_no_;
      const std::string t = trimmed(raw);
      if (t.empty()) continue;
      if (t[0] == '#') {
        const std::string c = trimmed(t.substr(1));
        if (c == "mode: f" || c == "mode:f") saw_f_mode_ = true;
        continue;
      }
      out = t;
      return true;
    }
    return false;
  }

  std::size_t line_no() const { return line_no_; }
  bool saw_f_mode() const { return saw_f_mode_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
  bool saw_f_mode_ = false;
};

std::vector<long> parse_ints(const std::string& line, std::size_t line_no) {
  std::vector<long> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      fail(line_no, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(line_no, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

void write_comment(std::ostream& out, const std::string& comment) {
  if (comment.empty()) return;
  std::istringstream is(comment);
  std::string line;
  while (std::getline(is, line)) out << "# " << line << "\n";
}

}  // namespace

CodeFile read_code_file(std::istream& in) {
  LineReader r(in);
  std::string line;
  if (!r.next(line)) throw std::runtime_error("empty code file");
  const auto header = parse_ints(line, r.line_no());
  if (header.size() != 2) fail(r.line_no(), "expected header 'q n'");
  CodeFile cf;
  cf.q = static_cast<int>(header[0]);
  cf.n = static_cast<int>(header[1]);
  if (cf.q < 1 || cf.n < 1) fail(r.line_no(), "q and n must be positive");
  std::vector<std::pair<std::vector<long>, std::size_t>> rows;
  while (r.next(line)) rows.emplace_back(parse_ints(line, r.line_no()), r.line_no());
  cf.mode = r.saw_f_mode() ? CoordMode::F : CoordMode::K;
  const int shift = cf.mode == CoordMode::F ? 1 : 0;
  const long lo = 1 - shift, hi = cf.q - shift;
  for (const auto& [vals, no] : rows) {
    if (static_cast<int>(vals.size()) != cf.n)
      fail(no, "expected " + std::to_string(cf.n) + " coordinates");
    Vertex v(cf.n);
    for (int i = 0; i < cf.n; ++i) {
      if (vals[i] < lo || vals[i] > hi)
        fail(no, "coordinate " + std::to_string(vals[i]) + " out of range");
      v[i] = static_cast<int>(vals[i]) + shift;
    }
    cf.words.push_back(std::move(v));
  }
  return cf;
}

CodeFile read_code_file(const std::string& path) {
  auto f = open_input(path);
  return read_code_file(f);
}

void write_code_file(std::ostream& out, const HammingGraph& graph,
                     std::span<const VertexId> words, CoordMode mode,
                     const std::string& comment) {
  write_comment(out, comment);
  if (mode == CoordMode::F) out << "# mode: f\n";
  out << graph.q() << " " << graph.n() << "\n";
  const int shift = mode == CoordMode::F ? 1 : 0;
  for (VertexId w : words) {
    const Vertex v = graph.vertex_at(w);
    for (int i = 0; i < graph.n(); ++i) out << (i ? " " : "") << v[i] - shift;
    out << "\n";
  }
}

void write_code_file(const std::string& path, const HammingGraph& graph,
                     std::span<const VertexId> words, CoordMode mode,
                     const std::string& comment) {
  auto f = open_output(path);
  write_code_file(f, graph, words, mode, comment);
}

LatinSquare read_latin_file(std::istream& in) {
  LineReader r(in);
  std::string line;
  if (!r.next(line)) throw std::runtime_error("empty latin square file");
  const auto header = parse_ints(line, r.line_no());
  if (header.size() != 1) fail(r.line_no(), "expected header 'q'");
  const int q = static_cast<int>(header[0]);
  if (q < 1) fail(r.line_no(), "q must be positive");
  LatinSquare sq(q);
  for (int x = 1; x <= q; ++x) {
    if (!r.next(line)) throw std::runtime_error("missing row " + std::to_string(x));
    const auto vals = parse_ints(line, r.line_no());
    if (static_cast<int>(vals.size()) != q)
      fail(r.line_no(), "expected " + std::to_string(q) + " entries");
    for (int y = 1; y <= q; ++y) {
      if (vals[y - 1] < 1 || vals[y - 1] > q)
        fail(r.line_no(), "entry " + std::to_string(vals[y - 1]) + " out of range");
      sq.set(x, y, static_cast<int>(vals[y - 1]));
    }
  }
  if (r.next(line)) fail(r.line_no(), "trailing content after the grid");
  if (!validate_latin(sq)) throw std::runtime_error("grid is not a latin square");
  return sq;
}

LatinSquare read_latin_file(const std::string& path) {
  auto f = open_input(path);
  return read_latin_file(f);
}

void write_latin_file(std::ostream& out, const LatinSquare& square) {
  out << square.order << "\n";
  for (int x = 1; x <= square.order; ++x) {
    for (int y = 1; y <= square.order; ++y) out << (y > 1 ? " " : "") << square.at(x, y);
    out << "\n";
  }
}

void write_latin_file(const std::string& path, const LatinSquare& square) {
  auto f = open_output(path);
  write_latin_file(f, square);
}

ParityCheckMatrix read_parity_check_file(std::istream& in) {
  LineReader r(in);
  std::string line;
  if (!r.next(line)) throw std::runtime_error("empty parity check file");
  const auto header = parse_ints(line, r.line_no());
  if (header.size() != 3) fail(r.line_no(), "expected header 'q k n'");
  const int q = static_cast<int>(header[0]);
  const int k = static_cast<int>(header[1]);
  const int n = static_cast<int>(header[2]);
  if (k < 1 || n < 1) fail(r.line_no(), "k and n must be positive");
  ParityCheckMatrix h(FiniteField::of_order(q), k, n);
  for (int row = 0; row < k; ++row) {
    if (!r.next(line)) throw std::runtime_error("missing matrix row " + std::to_string(row + 1));
    const auto vals = parse_ints(line, r.line_no());
    if (static_cast<int>(vals.size()) != n)
      fail(r.line_no(), "expected " + std::to_string(n) + " entries");
    for (int col = 0; col < n; ++col) {
      if (vals[col] < 0 || vals[col] >= q)
        fail(r.line_no(), "entry " + std::to_string(vals[col]) + " out of range");
      h.set(row, col, static_cast<int>(vals[col]));
    }
  }
  if (r.next(line)) fail(r.line_no(), "trailing content after the matrix");
  return h;
}

ParityCheckMatrix read_parity_check_file(const std::string& path) {
  auto f = open_input(path);
  return read_parity_check_file(f);
}

void write_parity_check_file(std::ostream& out, const ParityCheckMatrix& h) {
  out << h.field.q() << " " << h.k << " " << h.n << "\n";
  for (int row = 0; row < h.k; ++row) {
    for (int col = 0; col < h.n; ++col) out << (col ? " " : "") << h.at(row, col);
    out << "\n";
  }
}

void write_parity_check_file(const std::string& path, const ParityCheckMatrix& h) {
  auto f = open_output(path);
  write_parity_check_file(f, h);
}

GenericGraph read_generic_graph_file(std::istream& in) {
  LineReader r(in);
  GenericGraph g;
  std::string line;
  bool any = false;
  std::unordered_map<std::string, VertexId> seen;
  auto vertex_of = [&](const std::string& label) {
    const auto it = seen.find(label);
    if (it != seen.end()) return it->second;
    const VertexId v = g.add_vertex(label);
    seen.emplace(label, v);
    return v;
  };
  while (r.next(line)) {
    any = true;
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    if (toks.size() == 1) {
      vertex_of(toks[0]);
    } else if (toks.size() == 2) {
      const VertexId a = vertex_of(toks[0]);
      const VertexId b = vertex_of(toks[1]);
      if (a == b) fail(r.line_no(), "self-loop on '" + toks[0] + "'");
      g.add_edge(a, b);
    } else {
      fail(r.line_no(), "expected one or two labels per line");
    }
  }
  if (!any) throw std::runtime_error("empty graph file");
  return g;
}

GenericGraph read_generic_graph_file(const std::string& path) {
  auto f = open_input(path);
  return read_generic_graph_file(f);
}

}  // namespace hamcode
