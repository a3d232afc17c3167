#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamcode/bounds.hpp"
#include "hamcode/code.hpp"
#include "hamcode/construct3.hpp"
#include "hamcode/errors.hpp"
#include "hamcode/field.hpp"
#include "hamcode/graph.hpp"
#include "hamcode/io.hpp"
#include "hamcode/latin.hpp"
#include "hamcode/linear.hpp"
#include "hamcode/search.hpp"
#include "hamcode/verify.hpp"
#include "hamcode/version.hpp"

namespace {

using namespace hamcode;

// exit codes: 0 success/PASS, 1 property FAIL or UNSAT-when-asserting,
// 2 usage or input error, 3 search budget exhausted
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += " ";
    s += argv[i];
  }
  return s;
}

Property parse_property(const std::string& name) {
  if (name == "dom") return Property::Dominating;
  if (name == "id") return Property::Identifying;
  if (name == "sid") return Property::SelfIdentifying;
  if (name == "sld") return Property::SelfLocatingDominating;
  throw std::invalid_argument("unknown property '" + name + "'");
}

void remove_diagonal(HammingGraph& g) {
  for (int j = 1; j <= g.q(); ++j) g.remove_vertex(Vertex(static_cast<std::size_t>(g.n()), j));
}

std::string vertex_text(const HammingGraph& g, VertexId v, CoordMode mode) {
  const Vertex t = g.vertex_at(v);
  std::string s = "(";
  for (int i = 0; i < g.n(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i] - (mode == CoordMode::F ? 1 : 0));
  }
  return s + ")";
}

void emit_code(const std::string& out_path, const HammingGraph& g,
               std::span<const VertexId> words, CoordMode mode, const std::string& provenance) {
  if (out_path.empty()) {
    write_code_file(std::cout, g, words, mode);
  } else {
    write_code_file(out_path, g, words, mode, provenance);
    std::cout << "wrote " << words.size() << " codewords to " << out_path << "\n";
  }
}

struct ConstructArgs {
  std::string family;
  int q = 0, t = 0, k = 0, l = 0, r = 0;
  std::string in, out;
};

int run_construct(const ConstructArgs& a, const std::string& provenance) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("construct --family ") + a.family +
                                         " requires " + what);
  };
  if (a.family == "cq") {
    need(a.q >= 3, "--q >= 3");
    const Code c = construct_cq(a.q);
    emit_code(a.out, c.graph, c.words, CoordMode::K, provenance);
  } else if (a.family == "c1") {
    const Code c = construct_c1();
    emit_code(a.out, c.graph, c.words, CoordMode::K, provenance);
  } else if (a.family == "cl") {
    const Code c = construct_cl();
    emit_code(a.out, c.graph, c.words, CoordMode::K, provenance);
  } else if (a.family == "ct") {
    need(a.t >= 1, "--t >= 1");
    const Code c = construct_ct(a.t);
    emit_code(a.out, c.graph, c.words, CoordMode::K, provenance);
  } else if (a.family == "ext3") {
    need(a.r >= 1, "--r");
    std::optional<Code> base;
    if (!a.in.empty()) {
      const CodeFile cf = read_code_file(a.in);
      if (cf.n != 3) throw std::invalid_argument("ext3 base code must live in K_q^3");
      base.emplace(Code::of(HammingGraph(cf.q, 3), cf.words));
    } else {
      need(a.q >= 3, "--q >= 3 or --in BASE_FILE");
      base.emplace(construct_cq(a.q));
    }
    const Code c = extend_identifying(*base, a.r);
    emit_code(a.out, c.graph, c.words, CoordMode::K, provenance);
  } else if (a.family == "sid-coset") {
    need(a.q >= 2, "--q");
    need(a.k >= 1, "--k");
    const std::vector<Word> words = sid_coset_construction(a.q, a.k);
    const Code c = code_from_words(a.q, words);
    emit_code(a.out, c.graph, c.words, CoordMode::F, provenance);
  } else if (a.family == "sld-repeat") {
    need(a.q >= 2, "--q");
    need(a.k >= 1, "--k");
    const std::vector<Word> words = sld_repeated_column(a.q, a.k, a.l);
    const Code c = code_from_words(a.q, words);
    emit_code(a.out, c.graph, c.words, CoordMode::F, provenance);
  } else if (a.family == "latin-sld") {
    LatinSquare sq;
    if (!a.in.empty()) {
      sq = read_latin_file(a.in);
    } else {
      need(a.q >= 1, "--q or --in LATIN_FILE");
      sq = cyclic_latin(a.q);
    }
    const Code c = latin_to_code(sq);
    emit_code(a.out, c.graph, c.words, CoordMode::K, provenance);
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "'");
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string in, property = "id";
  bool delete_diagonal = false;
};

int run_verify(const VerifyArgs& a) {
  const CodeFile cf = read_code_file(a.in);
  HammingGraph g(cf.q, cf.n);
  if (a.delete_diagonal) remove_diagonal(g);
  const Code code = Code::of(std::move(g), cf.words);
  const Property prop = parse_property(a.property);
  VerificationReport rep;
  switch (prop) {
    case Property::Dominating: rep = is_dominating(code.graph, code.words); break;
    case Property::Identifying: rep = is_identifying(code.graph, code.words); break;
    case Property::SelfIdentifying: rep = is_self_identifying(code.graph, code.words); break;
    case Property::SelfLocatingDominating:
      rep = is_self_locating_dominating(code.graph, code.words);
      break;
  }
  std::cout << "code: " << code.size() << " words in K_" << cf.q << "^" << cf.n
            << (a.delete_diagonal ? " minus the diagonal" : "") << "\n";
  if (rep.holds) {
    std::cout << "PASS " << property_name(rep.property) << ", covers per vertex "
              << rep.stats.min_all << ".." << rep.stats.max_all << "\n";
    return kExitPass;
  }
  std::cout << "FAIL " << property_name(rep.property) << ": " << rep.detail << "\n";
  return kExitFail;
}

struct AnalyzeArgs {
  std::string in;
  bool kv = false;
};

int run_analyze(const AnalyzeArgs& a) {
  const CodeFile cf = read_code_file(a.in);
  const Code code = Code::of(HammingGraph(cf.q, cf.n), cf.words);
  const auto id = is_identifying(code.graph, code.words);
  if (!id.holds) {
    std::cout << "FAIL identifying: " << id.detail << "\n";
    return kExitFail;
  }
  const LemmaReport rep = check_layer_lemmas(code);
  const char axis_name[3] = {'x', 'y', 'z'};
  std::size_t corner_sum = 0;
  long long f_sum = 0;
  if (a.kv) {
    for (const LayerStats& st : rep.analysis.layers) {
      std::cout << "layer." << axis_name[st.axis] << "." << st.value
                << ".codewords=" << st.codeword_count << " a=" << st.a << " f=" << st.f
                << " x=" << st.x_count << " y=" << st.y_count << " corners=" << st.corners
                << " min_dom_superset=" << st.min_dom_superset << "\n";
      corner_sum += st.corners;
      f_sum += st.f;
    }
  } else {
    std::cout << "layer  |C|    a    f    |X|  |Y|  corners  M\n";
    for (const LayerStats& st : rep.analysis.layers) {
      std::ostringstream name;
      name << axis_name[st.axis] << "=" << st.value;
      std::cout << name.str();
      for (std::size_t pad = name.str().size(); pad < 7; ++pad) std::cout << ' ';
      std::cout << st.codeword_count << "    " << st.a << "    " << st.f << "    " << st.x_count
                << "    " << st.y_count << "    " << st.corners << "    " << st.min_dom_superset
                << "\n";
      corner_sum += st.corners;
      f_sum += st.f;
    }
  }
  std::size_t n_corner = 0, n_fellow = 0, n_plain = 0;
  for (const CodewordAnalysis& ca : rep.analysis.roles) {
    if (ca.role == CodewordRole::Corner) ++n_corner;
    else if (ca.role == CodewordRole::Fellow) ++n_fellow;
    else ++n_plain;
  }
  std::cout << "totals: |C|=" << code.size() << " |X|=" << rep.analysis.x_vertices.size()
            << " |Y|=" << rep.analysis.y_vertices.size() << " corners=" << n_corner
            << " fellows=" << n_fellow << " plain=" << n_plain
            << " corner_sum=" << corner_sum << " f_sum=" << f_sum << "\n";
  int failures = 0;
  for (const LemmaCheck& c : rep.checks) {
    if (c.ok) {
      std::cout << "ok   " << c.name << "\n";
    } else {
      std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
      ++failures;
    }
  }
  return failures == 0 ? kExitPass : kExitFail;
}

struct BoundsArgs {
  int q = 0, n = 3, k = 0;
  bool ratio = false;
};

int run_bounds(const BoundsArgs& a) {
  if (a.ratio) {
    if (a.k < 1) throw std::invalid_argument("bounds --ratio requires --k >= 1");
    const RatioReport r = ratio_report(a.q, a.k);
    std::cout << "q=" << r.q << " k=" << r.k << " n=" << r.n << "\n"
              << "upper=" << r.upper << "\n"
              << "lower=" << r.lower << "\n"
              << "ratio=" << r.ratio << "\n"
              << "chain_ok=" << (r.chain_ok ? "yes" : "no") << "\n";
    return r.chain_ok ? kExitPass : kExitFail;
  }
  const LowerBounds b = lower_bounds(a.q, a.n);
  std::cout << "q=" << b.q << " n=" << b.n << "\n"
            << "karpovsky=" << b.karpovsky << "\n"
            << "sid=" << b.sid << "\n";
  if (b.id3_quadratic) std::cout << "id3_quadratic=" << *b.id3_quadratic << "\n";
  if (b.id3_sqrt) std::cout << "id3_sqrt=" << *b.id3_sqrt << "\n";
  if (b.sld3) std::cout << "sld3=" << *b.sld3 << "\n";
  if (b.dom3) std::cout << "dom3=" << *b.dom3 << "\n";
  if (a.n == 3) std::cout << "best_known_id3_upper=" << best_known_upper(a.q) << "\n";
  return kExitPass;
}

struct SearchArgs {
  std::string graph, property = "id", in, out;
  int q = 0, n = 0;
  std::uint64_t size = 0;
  bool optimal = false;
  std::uint64_t start = 1;
  bool reduce = false;
  std::uint64_t budget = 100'000'000;
};

template <class G>
int drive_search(const G& g, const SearchArgs& a, CoordMode mode) {
  const Property prop = parse_property(a.property);
  std::vector<VertexId> witness;
  std::uint64_t nodes = 0;
  std::size_t found_size = 0;
  bool found = false;
  if (a.optimal) {
    const OptimalResult r =
        optimal_size(g, prop, static_cast<std::size_t>(a.start), a.reduce, a.budget);
    witness = r.witness;
    nodes = r.nodes;
    found_size = r.size;
    found = true;
    std::cout << "optimal size=" << r.size << " nodes=" << nodes << "\n";
  } else {
    if (a.size < 1) throw std::invalid_argument("search needs --size S or --optimal");
    SearchProblem p;
    p.property = prop;
    p.size = static_cast<std::size_t>(a.size);
    p.symmetry_reduction = a.reduce;
    p.node_budget = a.budget;
    const SearchOutcome o = exists_code(g, p);
    nodes = o.nodes;
    if (!o.found) {
      std::cout << "UNSAT size=" << a.size << " nodes=" << nodes << "\n";
      return kExitPass;
    }
    witness = o.witness;
    found_size = witness.size();
    found = true;
    std::cout << "SAT size=" << a.size << " nodes=" << nodes << "\n";
  }
  if (found) {
    std::cout << "witness (" << found_size << " words):";
    for (VertexId v : witness) {
      if constexpr (std::is_same_v<G, HammingGraph>)
        std::cout << " " << vertex_text(g, v, mode);
      else
        std::cout << " " << g.label(v);
    }
    std::cout << "\n";
    if (!a.out.empty()) {
      if constexpr (std::is_same_v<G, HammingGraph>) {
        write_code_file(a.out, g, witness, mode, "search witness");
        std::cout << "wrote witness to " << a.out << "\n";
      } else {
        throw std::invalid_argument("--out supports Hamming graphs only");
      }
    }
  }
  return kExitPass;
}

int run_search(const SearchArgs& a) {
  if (a.graph == "kq3" || a.graph == "kqn" || a.graph == "fq") {
    const int n = a.graph == "kq3" ? 3 : a.n;
    if (a.q < 2) throw std::invalid_argument("search needs --q >= 2");
    if (n < 1) throw std::invalid_argument("search --graph kqn/fq needs --n >= 1");
    const HammingGraph g(a.q, n);
    return drive_search(g, a, a.graph == "fq" ? CoordMode::F : CoordMode::K);
  }
  if (a.graph == "file") {
    if (a.in.empty()) throw std::invalid_argument("search --graph file needs --in FILE");
    const GenericGraph g = read_generic_graph_file(a.in);
    return drive_search(g, a, CoordMode::K);
  }
  throw std::invalid_argument("unknown graph kind '" + a.graph + "'");
}

struct ConvertArgs {
  std::string in, to, out;
};

int run_convert(const ConvertArgs& a, const std::string& provenance) {
  if (a.to == "k" || a.to == "f") {
    const CodeFile cf = read_code_file(a.in);
    const Code c = Code::of(HammingGraph(cf.q, cf.n), cf.words);
    emit_code(a.out, c.graph, c.words, a.to == "f" ? CoordMode::F : CoordMode::K, provenance);
    return kExitPass;
  }
  if (a.to == "latin") {
    const CodeFile cf = read_code_file(a.in);
    const Code c = Code::of(HammingGraph(cf.q, cf.n), cf.words);
    const LatinSquare sq = code_to_latin(c);
    if (a.out.empty()) {
      write_latin_file(std::cout, sq);
    } else {
      write_latin_file(a.out, sq);
      std::cout << "wrote order-" << sq.order << " latin square to " << a.out << "\n";
    }
    return kExitPass;
  }
  if (a.to == "code") {
    const LatinSquare sq = read_latin_file(a.in);
    const Code c = latin_to_code(sq);
    emit_code(a.out, c.graph, c.words, CoordMode::K, provenance);
    return kExitPass;
  }
  throw std::invalid_argument("unknown conversion target '" + a.to + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"identifying, self-identifying and self-locating-dominating codes in Hamming graphs"};
  app.require_subcommand(1);

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand("construct", "build a named code family");
  construct->add_option("--family", ca.family, "cq|c1|cl|ct|ext3|sid-coset|sld-repeat|latin-sld")
      ->required();
  construct->add_option("--q", ca.q, "alphabet size");
  construct->add_option("--t", ca.t, "recursion depth for ct (q = 4^t)");
  construct->add_option("--k", ca.k, "parity check order");
  construct->add_option("--l", ca.l, "extra repetitions of the first column");
  construct->add_option("--r", ca.r, "target alphabet size for ext3");
  construct->add_option("--in", ca.in, "base code or latin square file");
  construct->add_option("--out", ca.out, "output file (default: stdout)");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "check a property of a code file");
  verify->add_option("--in", va.in, "code file")->required();
  verify->add_option("--property", va.property, "dom|id|sid|sld");
  verify->add_flag("--delete-diagonal", va.delete_diagonal, "remove (j,...,j) vertices first");

  AnalyzeArgs aa;
  CLI::App* analyze = app.add_subcommand("analyze", "layer accounting for a code in K_q^3");
  analyze->add_option("--in", aa.in, "code file")->required();
  analyze->add_flag("--kv", aa.kv, "machine-readable key=value output");

  BoundsArgs ba;
  CLI::App* bounds = app.add_subcommand("bounds", "print lower bounds");
  bounds->add_option("--q", ba.q, "alphabet size")->required();
  bounds->add_option("--n", ba.n, "word length (default 3)");
  bounds->add_flag("--ratio", ba.ratio, "compare the tripled-column code with the lower bound");
  bounds->add_option("--k", ba.k, "parity check order for --ratio");

  SearchArgs sa;
  CLI::App* search = app.add_subcommand("search", "exhaustive search for small codes");
  search->add_option("--graph", sa.graph, "kq3|kqn|fq|file")->required();
  search->add_option("--property", sa.property, "dom|id|sid|sld");
  search->add_option("--q", sa.q, "alphabet size");
  search->add_option("--n", sa.n, "word length");
  search->add_option("--in", sa.in, "graph file for --graph file");
  search->add_option("--size", sa.size, "exact code size to try");
  search->add_flag("--optimal", sa.optimal, "scan upward for the smallest size");
  search->add_option("--start", sa.start, "starting size for --optimal");
  search->add_flag("--reduce", sa.reduce, "force the first vertex into the code");
  search->add_option("--budget", sa.budget, "search node budget");
  search->add_option("--out", sa.out, "write the witness as a code file");

  ConvertArgs va2;
  CLI::App* convert = app.add_subcommand("convert", "translate between file formats");
  convert->add_option("--in", va2.in, "input file")->required();
  convert->add_option("--to", va2.to, "k|f|latin|code")->required();
  convert->add_option("--out", va2.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const std::string provenance =
      std::string("hamcode ") + hamcode::kVersion + " | " + join_args(argc, argv);
  std::cout << "# " << provenance << "\n";

  try {
    if (construct->parsed()) return run_construct(ca, provenance);
    if (verify->parsed()) return run_verify(va);
    if (analyze->parsed()) return run_analyze(aa);
    if (bounds->parsed()) return run_bounds(ba);
    if (search->parsed()) return run_search(sa);
    if (convert->parsed()) return run_convert(va2, provenance);
  } catch (const hamcode::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
