#include "hamcode/linear.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hamcode/errors.hpp"

namespace hamcode {
namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<int> rref(const FiniteField& f, std::vector<int>& a, int rows, int cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (a[static_cast<std::size_t>(r) * cols + col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int c = 0; c < cols; ++c)
      std::swap(a[static_cast<std::size_t>(pr) * cols + c],
                a[static_cast<std::size_t>(row) * cols + c]);
    const int lead = a[static_cast<std::size_t>(row) * cols + col];
    const int ilead = f.inv(lead);
    for (int c = 0; c < cols; ++c) {
      auto& x = a[static_cast<std::size_t>(row) * cols + c];
      x = f.mul(x, ilead);
    }
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      const int factor = a[static_cast<std::size_t>(r) * cols + col];
      if (factor == 0) continue;
      for (int c = 0; c < cols; ++c) {
        auto& x = a[static_cast<std::size_t>(r) * cols + c];
        x = f.sub(x, f.mul(factor, a[static_cast<std::size_t>(row) * cols + c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Word add_words(const FiniteField& f, const Word& a, const Word& b) {
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

}  // namespace

ParityCheckMatrix hamming_parity_check(int q, int k) {
  const FiniteField f = FiniteField::of_order(q);
  if (k < 1) throw std::invalid_argument("hamming_parity_check: k must be >= 1");
  long long n = 0, pw = 1;
  for (int i = 0; i < k; ++i) pw *= q;
  n = (pw - 1) / (q - 1);
  if (n > 1 << 16) throw std::invalid_argument("hamming_parity_check: matrix too wide");

  ParityCheckMatrix h(f, k, static_cast<int>(n));
  // enumerate k-digit vectors in ascending lexicographic order, first digit
  // most significant, and keep those whose first nonzero entry is 1
  std::vector<int> col(k, 0);
  int out = 0;
  while (true) {
    int i = k - 1;
    while (i >= 0 && col[i] == q - 1) col[i--] = 0;
    if (i < 0) break;
    ++col[i];
    int first = 0;
    while (first < k && col[first] == 0) ++first;
    if (first == k || col[first] != 1) continue;
    for (int r = 0; r < k; ++r) h.set(r, out, col[r]);
    ++out;
  }
  if (out != h.n) throw std::logic_error("hamming_parity_check: column count mismatch");
  return h;
}

bool in_kernel(const ParityCheckMatrix& h, const Word& u) {
  if (static_cast<int>(u.size()) != h.n)
    throw std::invalid_argument("in_kernel: word length mismatch");
  for (int r = 0; r < h.k; ++r) {
    int acc = 0;
    for (int c = 0; c < h.n; ++c) acc = h.field.add(acc, h.field.mul(h.at(r, c), u[c]));
    if (acc != 0) return false;
  }
  return true;
}

std::vector<Word> kernel_words(const ParityCheckMatrix& h, std::uint64_t budget) {
  const FiniteField& f = h.field;
  std::vector<int> a = h.entries;
  const std::vector<int> pivots = rref(f, a, h.k, h.n);
  const int rank = static_cast<int>(pivots.size());
  const int free_count = h.n - rank;

  std::uint64_t total = 1;
  for (int i = 0; i < free_count; ++i) {
    total *= static_cast<std::uint64_t>(f.q());
    if (total > budget)
      throw BudgetError("kernel_words: q^" + std::to_string(free_count) +
                        " codewords exceed the enumeration budget");
  }

  std::vector<int> free_cols;
  {
    std::vector<char> is_pivot(h.n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int c = 0; c < h.n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }

  std::vector<Word> out;
  out.reserve(total);
  Word u(h.n, 0);
  std::vector<int> choice(free_count, 0);
  while (true) {
    for (int i = 0; i < free_count; ++i) u[free_cols[i]] = choice[i];
    // pivot value = -(row of RREF applied to free part)
    for (int r = 0; r < rank; ++r) {
      int acc = 0;
      for (int i = 0; i < free_count; ++i)
        acc = f.add(acc, f.mul(a[static_cast<std::size_t>(r) * h.n + free_cols[i]], choice[i]));
      u[pivots[r]] = f.neg(acc);
    }
    out.push_back(u);
    int i = free_count - 1;
    while (i >= 0 && choice[i] == f.q() - 1) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Code code_from_parity_check(const ParityCheckMatrix& h) {
  return code_from_words(h.field.q(), kernel_words(h));
}

int hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++d;
  return d;
}

int min_distance(const std::vector<Word>& words) {
  if (words.size() < 2) throw std::invalid_argument("min_distance: need at least two words");
  int best = static_cast<int>(words[0].size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, hamming_distance(words[i], words[j]));
  return best;
}

std::vector<Word> sid_coset_construction(int q, int k) {
  const ParityCheckMatrix h = hamming_parity_check(q, k);
  if (h.n < 2)
    throw std::invalid_argument("sid_coset_construction: needs word length >= 2");
  const FiniteField& f = h.field;
  const std::vector<Word> base = kernel_words(h);

  Word e1(h.n, 0), e2(h.n, 0);
  e1[0] = 1;
  e2[1] = 1;
  Word diff = add_words(f, e2, [&] {
    Word m(e1);
    for (auto& x : m) x = f.neg(x);
    return m;
  }());
  const auto in_base = [&](const Word& w) {
    return std::binary_search(base.begin(), base.end(), w);
  };
  if (in_base(e1) || in_base(e2) || in_base(diff))
    throw std::logic_error("sid_coset_construction: shift words collide with the code");

  std::vector<Word> out;
  out.reserve(3 * base.size());
  for (const Word& c : base) {
    out.push_back(c);
    out.push_back(add_words(f, c, e1));
    out.push_back(add_words(f, c, e2));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("sid_coset_construction: cosets overlap");
  return out;
}

std::vector<Word> direct_sum_extend(const std::vector<Word>& code, const FiniteField& field) {
  std::vector<Word> out;
  out.reserve(code.size() * static_cast<std::size_t>(field.q()));
  for (const Word& c : code)
    for (int t = 0; t < field.q(); ++t) {
      Word w = c;
      w.push_back(t);
      out.push_back(std::move(w));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> sld_repeated_column(int q, int k, int ell) {
  if (ell < 0) throw std::invalid_argument("sld_repeated_column: ell must be >= 0");
  const ParityCheckMatrix base = hamming_parity_check(q, k);
  const int n = 3 * base.n + ell;
  ParityCheckMatrix h(base.field, k, n);
  int out_col = 0;
  for (int c = 0; c < base.n; ++c) {
    const int copies = c == 0 ? ell + 3 : 3;
    for (int rep = 0; rep < copies; ++rep, ++out_col)
      for (int r = 0; r < k; ++r) h.set(r, out_col, base.at(r, c));
  }
  return kernel_words(h);
}

std::size_t neighborhood_intersection_size(const HammingGraph& g, VertexId c1, VertexId c2) {
  if (!g.contains(c1) || !g.contains(c2))
    throw std::invalid_argument("neighborhood_intersection_size: vertex not in graph");
  std::size_t count = 0;
  g.for_each_in_ball(c1, [&](VertexId x) {
    if (g.in_ball(c2, x)) ++count;
  });
  return count;
}

VertexId common_neighbor_of_three(const HammingGraph& g, VertexId c1, VertexId c2, VertexId c3) {
  std::vector<VertexId> hits;
  g.for_each_in_ball(c1, [&](VertexId x) {
    if (g.in_ball(c2, x) && g.in_ball(c3, x)) hits.push_back(x);
  });
  if (hits.size() != 1)
    throw std::invalid_argument("common_neighbor_of_three: intersection has " +
                                std::to_string(hits.size()) + " vertices, expected exactly 1");
  return hits[0];
}

Vertex word_to_vertex(const Word& w) {
  Vertex v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] + 1;
  return v;
}

Word vertex_to_word(const Vertex& v) {
  Word w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] - 1;
  return w;
}

Code code_from_words(int q, const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("code_from_words: empty word list");
  HammingGraph g(q, static_cast<int>(words[0].size()));
  std::vector<VertexId> ids;
  ids.reserve(words.size());
  for (const Word& w : words) ids.push_back(g.index_of(word_to_vertex(w)));
  return Code(std::move(g), std::move(ids));
}

}  // namespace hamcode
