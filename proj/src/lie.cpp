#include "extschur/lie.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace extschur {

BracketTree BracketTree::leaf(int label) {
  if (label < 1) throw ContractViolation("leaf labels start at 1");
  BracketTree t;
  t.label_ = label;
  return t;
}

BracketTree BracketTree::bracket(const BracketTree& left, const BracketTree& right) {
  BracketTree t;
  t.left_ = std::make_shared<const BracketTree>(left);
  t.right_ = std::make_shared<const BracketTree>(right);
  return t;
}

namespace {

BracketTree parse_tree(std::string_view text, std::size_t& pos) {
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    BracketTree left = parse_tree(text, pos);
    skip();
    if (pos >= text.size() || text[pos] != ',')
      throw std::invalid_argument("expected ',' in bracket");
    ++pos;
    BracketTree right = parse_tree(text, pos);
    skip();
    if (pos >= text.size() || text[pos] != ']')
      throw std::invalid_argument("expected ']' in bracket");
    ++pos;
    return BracketTree::bracket(left, right);
  }
  int value = 0;
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    value = value * 10 + (text[pos++] - '0');
  if (pos == start) throw std::invalid_argument("expected a leaf label");
  return BracketTree::leaf(value);
}

}  // namespace

BracketTree BracketTree::parse(std::string_view text) {
  std::size_t pos = 0;
  BracketTree t = parse_tree(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw std::invalid_argument("trailing input after tree");
  return t;
}

BracketTree BracketTree::left_normed(const std::vector<int>& labels) {
  if (labels.empty()) throw ContractViolation("empty bracket");
  BracketTree t = leaf(labels.front());
  for (std::size_t i = 1; i < labels.size(); ++i) t = bracket(t, leaf(labels[i]));
  return t;
}

std::vector<int> BracketTree::labels() const {
  if (is_leaf()) return {label_};
  std::vector<int> out = left_->labels();
  const std::vector<int> r = right_->labels();
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string BracketTree::str() const {
  if (is_leaf()) return std::to_string(label_);
  return "[" + left_->str() + "," + right_->str() + "]";
}

namespace {

MultilinearPoly expand_rec(const BracketTree& t) {
  if (t.is_leaf()) return {{{t.label()}, Rational(1)}};
  const MultilinearPoly a = expand_rec(t.left());
  const MultilinearPoly b = expand_rec(t.right());
  MultilinearPoly out;
  auto accumulate = [&](std::vector<int> word, const Rational& c) {
    Rational& slot = out[word];
    slot += c;
    if (sgn(slot) == 0) out.erase(word);
  };
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      std::vector<int> ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      std::vector<int> ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      accumulate(std::move(ab), ca * cb);
      accumulate(std::move(ba), -(ca * cb));
    }
  return out;
}

std::size_t word_index(const std::vector<int>& word) {
  std::vector<int> zero_based(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) zero_based[i] = word[i] - 1;
  return permutation_rank(Permutation{std::move(zero_based)});
}

// Solves against the left-normed expansions through a fixed invertible
// square subsystem, then checks the full system.
struct LieSolver {
  int k = 0;
  RationalMatrix expansions;             // k! x (k-1)!
  std::vector<std::size_t> pivot_words;  // rows of the square subsystem
  RationalMatrix inverse;                // inverse of that subsystem

  explicit LieSolver(int k_) : k(k_) {
    const auto basis = lie_basis(k);
    const std::size_t words = factorial(k);
    expansions = RationalMatrix(words, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const auto& [word, c] : expand_bracket(basis[j]))
        expansions(word_index(word), j) = c;

    pivot_words = row_reduce(expansions.transpose()).pivots;
    if (pivot_words.size() != basis.size())
      throw std::logic_error("left-normed expansions are dependent");

    const std::size_t d = basis.size();
    RationalMatrix augmented(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) augmented(i, j) = expansions(pivot_words[i], j);
      augmented(i, d + i) = 1;
    }
    const Echelon e = row_reduce(std::move(augmented));
    inverse = RationalMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) inverse(i, j) = e.reduced(i, d + j);
  }

  RationalVector solve(const MultilinearPoly& p) const {
    RationalVector target(expansions.rows());
    for (const auto& [word, c] : p) {
      if (static_cast<int>(word.size()) != k)
        throw ContractViolation("word length differs from arity");
      target[word_index(word)] = c;
    }
    RationalVector selected(pivot_words.size());
    for (std::size_t i = 0; i < pivot_words.size(); ++i) selected[i] = target[pivot_words[i]];
    RationalVector coeffs = inverse.apply(selected);
    if (expansions.apply(coeffs) != target)
      throw std::logic_error("element is not in the span of the Lie basis");
    return coeffs;
  }
};

const LieSolver& lie_solver(int k) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<LieSolver>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<LieSolver>(k);
  return *slot;
}

}  // namespace

MultilinearPoly expand_bracket(const BracketTree& t) {
  std::vector<int> labels = t.labels();
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw ContractViolation("bracket tree repeats a label");
  return expand_rec(t);
}

std::vector<BracketTree> lie_basis(int k) {
  if (k < 1) throw ContractViolation("Lie(k) needs k >= 1");
  std::vector<int> tail(static_cast<std::size_t>(k - 1));
  std::iota(tail.begin(), tail.end(), 2);
  std::vector<BracketTree> out;
  do {
    std::vector<int> labels{1};
    labels.insert(labels.end(), tail.begin(), tail.end());
    out.push_back(BracketTree::left_normed(labels));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

std::uint64_t lie_dim(int k) {
  const auto basis = lie_basis(k);
  SparseEchelonBasis span;
  for (const auto& t : basis) {
    SparseVector v;
    for (const auto& [word, c] : expand_bracket(t)) v.emplace(word_index(word), c);
    span.insert(std::move(v));
  }
  return span.rank();
}

RationalVector rewrite_to_basis(const MultilinearPoly& p, int k) {
  return lie_solver(k).solve(p);
}

RationalVector rewrite_to_basis(const BracketTree& t) {
  return rewrite_to_basis(expand_bracket(t), static_cast<int>(t.labels().size()));
}

namespace {

BracketTree relabel_tree(const BracketTree& t, const Permutation& relabel) {
  if (t.is_leaf()) return BracketTree::leaf(relabel(t.label() - 1) + 1);
  return BracketTree::bracket(relabel_tree(t.left(), relabel),
                              relabel_tree(t.right(), relabel));
}

}  // namespace

const RationalMatrix& lie_action(const Permutation& relabel) {
  static std::mutex mutex;
  static std::map<Permutation, std::unique_ptr<RationalMatrix>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(relabel); it != cache.end()) return *it->second;
  }
  const int k = relabel.degree();
  const auto basis = lie_basis(k);
  auto m = std::make_unique<RationalMatrix>(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const RationalVector col = rewrite_to_basis(relabel_tree(basis[j], relabel));
    for (std::size_t i = 0; i < basis.size(); ++i) (*m)(i, j) = col[i];
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(relabel, std::move(m));
  return *it->second;
}

std::vector<std::vector<int>> surjections(int n, int m) {
  std::vector<std::vector<int>> out;
  if (n < 0 || m < 0) return out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    if (m == 0) out.push_back(f);
    return out;
  }
  if (m == 0) return out;
  while (true) {
    std::vector<bool> hit(static_cast<std::size_t>(m), false);
    for (int v : f) hit[static_cast<std::size_t>(v)] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[static_cast<std::size_t>(i)] == m - 1) f[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++f[static_cast<std::size_t>(i)];
  }
  return out;
}

std::uint64_t catlie_dim(int sources, int targets) {
  if (sources < targets) return 0;
  std::uint64_t total = 0;
  for (const auto& f : surjections(sources, targets)) {
    std::vector<int> fiber(static_cast<std::size_t>(targets), 0);
    for (int v : f) ++fiber[static_cast<std::size_t>(v)];
    std::uint64_t term = 1;
    for (int size : fiber) term *= factorial(size - 1);
    total += term;
  }
  return total;
}

std::vector<CatLieBasisElement> catlie_basis(int n, int m) {
  std::vector<CatLieBasisElement> out;
  for (const auto& f : surjections(n, m)) {
    std::vector<int> dims(static_cast<std::size_t>(m), 0);
    for (int v : f) ++dims[static_cast<std::size_t>(v)];
    for (int& d : dims) d = static_cast<int>(factorial(d - 1));
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    while (true) {
      out.push_back({f, idx});
      int i = m - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == dims[static_cast<std::size_t>(i)] - 1)
        idx[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

Rational bimodule_trace(int n, int m, const Permutation& sigma,
                        const Permutation& tau) {
  if (sigma.degree() != m || tau.degree() != n)
    throw ContractViolation("bimodule_trace: permutation degrees do not match (n, m)");
  Rational trace = 0;
  for (const auto& f : surjections(n, m)) {
    // The relabelled surjection sends tau(j) to sigma(f(j)); only fixed
    // surjections contribute to the trace.
    bool fixed = true;
    for (int j = 0; j < n && fixed; ++j)
      fixed = f[static_cast<std::size_t>(tau(j))] == sigma(f[static_cast<std::size_t>(j)]);
    if (!fixed) continue;

    std::vector<std::vector<int>> fibers(static_cast<std::size_t>(m));
    for (int j = 0; j < n; ++j) fibers[static_cast<std::size_t>(f[static_cast<std::size_t>(j)])].push_back(j);

    // Slot i is carried to slot sigma(i); within the fibre, position p goes
    // to the position of tau(fibre_i[p]) in fibre_sigma(i).
    std::vector<const RationalMatrix*> actions(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto& src = fibers[static_cast<std::size_t>(i)];
      const auto& dst = fibers[static_cast<std::size_t>(sigma(i))];
      std::vector<int> standard(src.size());
      for (std::size_t p = 0; p < src.size(); ++p)
        standard[p] = static_cast<int>(
            std::find(dst.begin(), dst.end(), tau(src[p])) - dst.begin());
      actions[static_cast<std::size_t>(i)] = &lie_action(Permutation{std::move(standard)});
    }

    // Sum over basis tuples of prod_i A_i[b_sigma(i), b_i].
    std::vector<std::size_t> dims(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) dims[static_cast<std::size_t>(i)] = actions[static_cast<std::size_t>(i)]->rows();
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
      Rational term = 1;
      for (int i = 0; i < m && sgn(term) != 0; ++i)
        term *= (*actions[static_cast<std::size_t>(i)])(idx[static_cast<std::size_t>(sigma(i))],
                                                        idx[static_cast<std::size_t>(i)]);
      trace += term;
      int i = m - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == dims[static_cast<std::size_t>(i)])
        idx[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
    }
  }
  return trace;
}

}  // namespace extschur
