#include "extschur/polyfunctor.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace extschur {

int target_arity(const HopfGenerator& g) {
  switch (g.kind) {
    case GeneratorKind::mult:
    case GeneratorKind::counit:
      return g.arity - 1;
    case GeneratorKind::unit:
    case GeneratorKind::comult:
      return g.arity + 1;
    case GeneratorKind::antipode:
    case GeneratorKind::swap:
      return g.arity;
  }
  return g.arity;
}

void validate(const HopfGenerator& g) {
  int last = g.arity;  // largest legal slot
  switch (g.kind) {
    case GeneratorKind::mult:
    case GeneratorKind::swap:
      last = g.arity - 1;
      break;
    case GeneratorKind::unit:
      last = g.arity + 1;
      break;
    default:
      break;
  }
  if (g.arity < 0 || g.slot < 1 || g.slot > last)
    throw ContractViolation("generator slot out of range: " + to_string(g));
}

std::string to_string(const HopfGenerator& g) {
  static const char* names[] = {"mult", "unit", "comult", "counit", "antipode", "swap"};
  return std::string(names[static_cast<int>(g.kind)]) + "@" + std::to_string(g.slot) +
         "/" + std::to_string(g.arity);
}

RationalMatrix generator_matrix(const HopfGenerator& g) {
  validate(g);
  const int a = g.arity;
  const int s = g.slot - 1;  // zero-based
  RationalMatrix m(static_cast<std::size_t>(target_arity(g)), static_cast<std::size_t>(a));
  auto set = [&](int row, int col, long v) {
    m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = v;
  };
  for (int j = 0; j < a; ++j) {
    switch (g.kind) {
      case GeneratorKind::mult:  // x_s, x_{s+1} -> x_s
        set(j <= s ? j : j - 1, j, 1);
        break;
      case GeneratorKind::unit:  // fresh variable at s, never hit
        set(j < s ? j : j + 1, j, 1);
        break;
      case GeneratorKind::comult:  // x_s -> x_s + x_{s+1}
        if (j < s) {
          set(j, j, 1);
        } else if (j == s) {
          set(s, j, 1);
          set(s + 1, j, 1);
        } else {
          set(j + 1, j, 1);
        }
        break;
      case GeneratorKind::counit:  // x_s -> 0
        if (j != s) set(j < s ? j : j - 1, j, 1);
        break;
      case GeneratorKind::antipode:
        set(j, j, j == s ? -1 : 1);
        break;
      case GeneratorKind::swap:
        set(j == s ? s + 1 : (j == s + 1 ? s : j), j, 1);
        break;
    }
  }
  return m;
}

int GeneratorWord::casimir_count() const {
  return static_cast<int>(std::count_if(steps_.begin(), steps_.end(), [](const WordStep& s) {
    return std::holds_alternative<CasimirInsertion>(s);
  }));
}

void GeneratorWord::push(WordStep step) {
  if (auto* g = std::get_if<HopfGenerator>(&step)) {
    if (g->arity != target_) throw ContractViolation("arity chain broken");
    validate(*g);
    target_ = target_arity(*g);
  } else {
    const auto& c = std::get<CasimirInsertion>(step);
    if (c.arity != target_ || c.slot < 1 || c.slot > target_ + 1)
      throw ContractViolation("Casimir insertion slot out of range");
    target_ += 2;
  }
  steps_.push_back(step);
}

GeneratorWord& GeneratorWord::then(GeneratorKind kind, int slot) {
  push(HopfGenerator{kind, slot, target_});
  return *this;
}

GeneratorWord& GeneratorWord::then_casimir(int slot) {
  push(CasimirInsertion{slot, target_});
  return *this;
}

GeneratorWord& GeneratorWord::then_word(const GeneratorWord& other, int offset) {
  const int right = target_ - offset - other.source();
  if (offset < 0 || right < 0) throw ContractViolation("word does not fit");
  const GeneratorWord shifted = other.embedded(offset, right);
  for (const auto& step : shifted.steps()) push(step);
  return *this;
}

GeneratorWord GeneratorWord::embedded(int left, int right) const {
  GeneratorWord out(source_ + left + right);
  for (const auto& step : steps_) {
    if (const auto* g = std::get_if<HopfGenerator>(&step)) {
      out.push(HopfGenerator{g->kind, g->slot + left, g->arity + left + right});
    } else {
      const auto& c = std::get<CasimirInsertion>(step);
      out.push(CasimirInsertion{c.slot + left, c.arity + left + right});
    }
  }
  return out;
}

std::string GeneratorWord::str() const {
  std::string s;
  for (const auto& step : steps_) {
    if (!s.empty()) s += ' ';
    if (const auto* g = std::get_if<HopfGenerator>(&step)) {
      s += to_string(*g);
    } else {
      const auto& c = std::get<CasimirInsertion>(step);
      s += "casimir@" + std::to_string(c.slot) + "/" + std::to_string(c.arity);
    }
  }
  return s.empty() ? "id/" + std::to_string(source_) : s;
}

GeneratorWord adjoint_word() {
  GeneratorWord ad(2);
  ad.then(GeneratorKind::comult, 1)
      .then(GeneratorKind::swap, 2)
      .then(GeneratorKind::antipode, 3)
      .then(GeneratorKind::mult, 1)
      .then(GeneratorKind::mult, 1);
  return ad;
}

RationalMatrix word_matrix(const GeneratorWord& w) {
  RationalMatrix m = RationalMatrix::identity(static_cast<std::size_t>(w.source()));
  for (const auto& step : w.steps()) {
    const auto* g = std::get_if<HopfGenerator>(&step);
    if (!g) throw ContractViolation("word_matrix: word inserts a Casimir tensor");
    m = generator_matrix(*g) * m;
  }
  return m;
}

std::string to_string(const FunctorKind& kind) {
  return std::string(kind.family == FunctorFamily::symmetric ? "Sym^" : "Lambda^") +
         std::to_string(kind.degree);
}

namespace {

struct FunctorBasis {
  std::vector<std::vector<int>> keys;
  std::map<std::vector<int>, std::size_t> index;
};

void exponent_vectors(int arity, int degree, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == arity) {
    if (degree == 0) out.push_back(prefix);
    return;
  }
  const bool last = static_cast<int>(prefix.size()) == arity - 1;
  for (int e = degree; e >= (last ? degree : 0); --e) {
    prefix.push_back(e);
    exponent_vectors(arity, degree - e, prefix, out);
    prefix.pop_back();
  }
}

void index_sets(int arity, int degree, int start, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == degree) {
    out.push_back(prefix);
    return;
  }
  for (int i = start; i < arity; ++i) {
    prefix.push_back(i);
    index_sets(arity, degree, i + 1, prefix, out);
    prefix.pop_back();
  }
}

const FunctorBasis& basis_for(const FunctorKind& kind, int arity) {
  if (kind.degree < 0 || arity < 0) throw ContractViolation("negative degree or arity");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<FunctorBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(kind.family), kind.degree, arity}];
  if (!slot) {
    slot = std::make_unique<FunctorBasis>();
    std::vector<int> prefix;
    if (kind.family == FunctorFamily::symmetric) {
      if (arity == 0) {
        if (kind.degree == 0) slot->keys.push_back({});
      } else {
        exponent_vectors(arity, kind.degree, prefix, slot->keys);
      }
    } else {
      index_sets(arity, kind.degree, 0, prefix, slot->keys);
    }
    for (std::size_t i = 0; i < slot->keys.size(); ++i) slot->index.emplace(slot->keys[i], i);
  }
  return *slot;
}

void accumulate(FunctorElement& x, const std::vector<int>& key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = x.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) x.erase(it);
  }
}

// Nonzero entries (row, value) of column j.
std::vector<std::pair<int, Rational>> column_terms(const RationalMatrix& m, std::size_t j) {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (sgn(m(r, j)) != 0) out.emplace_back(static_cast<int>(r), m(r, j));
  return out;
}

}  // namespace

const std::vector<std::vector<int>>& functor_basis(const FunctorKind& kind, int arity) {
  return basis_for(kind, arity).keys;
}

std::size_t functor_dim(const FunctorKind& kind, int arity) {
  return basis_for(kind, arity).keys.size();
}

FunctorElement apply_linear(const FunctorKind& kind, const RationalMatrix& linear,
                            const FunctorElement& x) {
  const int target = static_cast<int>(linear.rows());
  std::vector<std::vector<std::pair<int, Rational>>> columns(linear.cols());
  for (std::size_t j = 0; j < linear.cols(); ++j) columns[j] = column_terms(linear, j);

  FunctorElement out;
  for (const auto& [key, coeff] : x) {
    // Expand the product of the images of the factors of this basis element.
    FunctorElement partial;
    partial.emplace(kind.family == FunctorFamily::symmetric
                        ? std::vector<int>(static_cast<std::size_t>(target), 0)
                        : std::vector<int>{},
                    coeff);
    auto multiply_by = [&](std::size_t j) {
      FunctorElement next;
      for (const auto& [k, c] : partial)
        for (const auto& [row, v] : columns[j]) {
          if (kind.family == FunctorFamily::symmetric) {
            std::vector<int> nk = k;
            ++nk[static_cast<std::size_t>(row)];
            accumulate(next, nk, c * v);
          } else {
            if (std::binary_search(k.begin(), k.end(), row)) continue;
            std::vector<int> nk = k;
            auto pos = std::upper_bound(nk.begin(), nk.end(), row);
            // Moving the new factor past the larger indices costs a sign each.
            const auto jumped = nk.end() - pos;
            nk.insert(pos, row);
            accumulate(next, nk, jumped % 2 == 0 ? Rational(c * v) : Rational(-(c * v)));
          }
        }
      partial = std::move(next);
    };
    if (kind.family == FunctorFamily::symmetric) {
      if (key.size() != linear.cols()) throw ContractViolation("element arity mismatch");
      for (std::size_t j = 0; j < key.size(); ++j)
        for (int e = 0; e < key[j]; ++e) multiply_by(j);
    } else {
      for (int j : key) {
        if (j < 0 || static_cast<std::size_t>(j) >= linear.cols())
          throw ContractViolation("element arity mismatch");
        multiply_by(static_cast<std::size_t>(j));
      }
    }
    for (const auto& [k, c] : partial) accumulate(out, k, c);
  }
  return out;
}

RationalVector to_vector(const FunctorKind& kind, int arity, const FunctorElement& x) {
  const auto& b = basis_for(kind, arity);
  RationalVector v(b.keys.size());
  for (const auto& [key, c] : x) {
    auto it = b.index.find(key);
    if (it == b.index.end()) throw ContractViolation("key outside the functor basis");
    v[it->second] = c;
  }
  return v;
}

FunctorElement from_vector(const FunctorKind& kind, int arity, const RationalVector& v) {
  const auto& b = basis_for(kind, arity);
  if (v.size() != b.keys.size()) throw ContractViolation("vector length mismatch");
  FunctorElement x;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) x.emplace(b.keys[i], v[i]);
  return x;
}

RationalMatrix functor_matrix(const FunctorKind& kind, const RationalMatrix& linear) {
  const int source = static_cast<int>(linear.cols());
  const int target = static_cast<int>(linear.rows());
  const auto& src = basis_for(kind, source);
  const auto& dst = basis_for(kind, target);
  RationalMatrix m(dst.keys.size(), src.keys.size());
  for (std::size_t j = 0; j < src.keys.size(); ++j)
    for (const auto& [key, c] : apply_linear(kind, linear, {{src.keys[j], Rational(1)}}))
      m(dst.index.at(key), j) = c;
  return m;
}

std::string render(const FunctorKind& kind, const FunctorElement& x) {
  if (x.empty()) return "0";
  std::string s;
  // Symmetric terms in lex order (x1^2 before x1*x2), exterior in index order.
  std::vector<const FunctorElement::value_type*> terms;
  for (const auto& term : x) terms.push_back(&term);
  if (kind.family == FunctorFamily::symmetric) std::reverse(terms.begin(), terms.end());
  for (const auto* term : terms) {
    const auto& [key, c] = *term;
    std::string factors;
    if (kind.family == FunctorFamily::symmetric) {
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] == 0) continue;
        if (!factors.empty()) factors += '*';
        factors += "x" + std::to_string(i + 1);
        if (key[i] > 1) factors += "^" + std::to_string(key[i]);
      }
    } else {
      for (int i : key) {
        if (!factors.empty()) factors += " ^ ";
        factors += "x" + std::to_string(i + 1);
      }
    }
    if (factors.empty()) factors = "1";
    const bool negative = sgn(c) < 0;
    const Rational magnitude = abs(c);
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    if (magnitude != 1) s += magnitude.get_str() + "*";
    s += factors;
  }
  return s;
}

FunctorElement canonical_generator(const FunctorKind& kind) {
  std::vector<int> key;
  if (kind.family == FunctorFamily::symmetric) {
    key.assign(static_cast<std::size_t>(kind.degree), 1);
  } else {
    for (int i = 0; i < kind.degree; ++i) key.push_back(i);
  }
  return {{key, Rational(1)}};
}

namespace {

struct WordSum {
  std::vector<std::pair<Rational, GeneratorWord>> terms;
};

FunctorElement apply_sum(const FunctorKind& kind, const WordSum& sum,
                         const FunctorElement& x) {
  FunctorElement out;
  for (const auto& [coeff, word] : sum.terms)
    for (const auto& [key, c] : apply_linear(kind, word_matrix(word), x))
      accumulate(out, key, coeff * c);
  return out;
}

GeneratorWord single(int arity, GeneratorKind kind, int slot) {
  GeneratorWord w(arity);
  w.then(kind, slot);
  return w;
}

// lhs - rhs as a word sum on a common arity.
WordSum difference(std::vector<GeneratorWord> lhs, std::vector<GeneratorWord> rhs,
                   const Rational& rhs_scale = 1) {
  WordSum s;
  for (auto& w : lhs) s.terms.emplace_back(Rational(1), std::move(w));
  for (auto& w : rhs) s.terms.emplace_back(-rhs_scale, std::move(w));
  return s;
}

// A constraint on the unknown; optionally justified by an identity of the
// source generator that must hold for the constraint to be valid.
struct Constraint {
  WordSum on_unknown;
  std::optional<WordSum> source_identity;
};

std::vector<Constraint> build_constraints(const FunctorKind& source) {
  const int l = source.degree;
  const int a = l + 2;
  std::vector<Constraint> out;
  // Counit at both Casimir slots.
  out.push_back({difference({single(a, GeneratorKind::counit, l + 1)}, {}), {}});
  out.push_back({difference({single(a, GeneratorKind::counit, l + 2)}, {}), {}});
  // Counit at each source slot, valid because the generator is killed by it.
  for (int j = 1; j <= l; ++j)
    out.push_back({difference({single(a, GeneratorKind::counit, j)}, {}),
                   difference({single(l, GeneratorKind::counit, j)}, {})});
  // The Casimir tensor is symmetric.
  out.push_back({difference({single(a, GeneratorKind::swap, l + 1)}, {GeneratorWord(a)}), {}});
  // Source symmetry: adjacent transpositions act by +1 or by the sign.
  const Rational eigen = source.family == FunctorFamily::symmetric ? 1 : -1;
  for (int j = 1; j < l; ++j)
    out.push_back({difference({single(a, GeneratorKind::swap, j)}, {GeneratorWord(a)}, eigen),
                   difference({single(l, GeneratorKind::swap, j)}, {GeneratorWord(l)}, eigen)});
  // Comultiplication at the first and second Casimir slot.
  out.push_back({difference({single(a, GeneratorKind::comult, l + 1)},
                            {single(a, GeneratorKind::unit, l + 2),
                             single(a, GeneratorKind::unit, l + 1)}),
                 {}});
  out.push_back({difference({single(a, GeneratorKind::comult, l + 2)},
                            {single(a, GeneratorKind::unit, l + 2),
                             single(a, GeneratorKind::unit, l + 3)}),
                 {}});
  // Comultiplication at source slot j, moved past the Casimir insertion by
  // monoidal interchange.
  for (int j = 1; j <= l; ++j)
    out.push_back({difference({single(a, GeneratorKind::comult, j)},
                              {single(a, GeneratorKind::unit, j),
                               single(a, GeneratorKind::unit, j + 1)}),
                   difference({single(l, GeneratorKind::comult, j)},
                              {single(l, GeneratorKind::unit, j),
                               single(l, GeneratorKind::unit, j + 1)})});
  return out;
}

// Appends the rows of one constraint (as sparse rows over the unknown's
// coordinates) to `rows`.
void constraint_rows(const FunctorKind& target, int arity, const WordSum& sum,
                     std::vector<SparseVector>& rows) {
  const auto& keys = functor_basis(target, arity);
  std::map<std::vector<int>, SparseVector> by_key;
  for (std::size_t b = 0; b < keys.size(); ++b)
    for (const auto& [key, c] : apply_sum(target, sum, {{keys[b], Rational(1)}}))
      by_key[key].emplace(b, c);
  for (auto& [key, row] : by_key) rows.push_back(std::move(row));
}

std::vector<SparseVector> all_constraint_rows(const FunctorKind& source,
                                              const FunctorKind& target) {
  const int l = source.degree;
  const FunctorElement x = canonical_generator(source);
  std::vector<SparseVector> rows;
  for (const auto& c : build_constraints(source)) {
    if (c.source_identity && !apply_sum(source, *c.source_identity, x).empty())
      throw std::logic_error("source identity behind a Casimir constraint fails for " +
                             to_string(source));
    constraint_rows(target, l + 2, c.on_unknown, rows);
  }
  return rows;
}

}  // namespace

RationalMatrix casimir_constraint_matrix(const FunctorKind& source,
                                         const FunctorKind& target) {
  const auto rows = all_constraint_rows(source, target);
  const std::size_t cols = functor_dim(target, source.degree + 2);
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  return m;
}

KernelReport solve_casimir_constraints(const FunctorKind& source,
                                       const FunctorKind& target) {
  const int arity = source.degree + 2;
  const auto& keys = functor_basis(target, arity);
  SparseEchelonBasis echelon;
  for (auto& row : all_constraint_rows(source, target)) {
    echelon.insert(std::move(row));
    if (echelon.rank() == keys.size()) break;
  }
  KernelReport report{source, target, arity, {}};
  for (const auto& v : sparse_kernel_basis(echelon, keys.size())) {
    FunctorElement x;
    for (const auto& [i, c] : v) x.emplace(keys[i], c);
    report.kernel.push_back(std::move(x));
  }
  return report;
}

}  // namespace extschur
