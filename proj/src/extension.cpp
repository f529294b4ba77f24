#include "extschur/extension.hpp"

#include <stdexcept>

namespace extschur {

namespace {

void add_scaled(FunctorElement& into, const FunctorElement& x, const Rational& s) {
  for (const auto& [key, c] : x) {
    auto [it, inserted] = into.emplace(key, s * c);
    if (!inserted) it->second += s * c;
    if (sgn(it->second) == 0) into.erase(it);
  }
}

FunctorKind sym(int degree) { return {FunctorFamily::symmetric, degree}; }

}  // namespace

ExtensionModule::ExtensionModule(ExtensionDatum datum) : datum_(std::move(datum)) {
  const int d = datum_.source.degree;
  if (datum_.source != sym(d) || datum_.target != sym(d + 2))
    throw ContractViolation("extension data must map Sym^d to Sym^(d+2)");
  for (const auto& [key, c] : datum_.value)
    if (static_cast<int>(key.size()) != d + 2)
      throw ContractViolation("extension datum must live at arity d + 2");
  to_vector(datum_.target, d + 2, datum_.value);  // validates the keys
}

FunctorElement ExtensionModule::casimir_action(int arity, int slot,
                                               const FunctorElement& lower) const {
  if (slot < 1 || slot > arity + 1) throw ContractViolation("Casimir slot out of range");
  const int d = degree();
  const auto target = static_cast<std::size_t>(arity + 2);
  // Old variable j lands at j, or at j + 2 once it sits past the new slots.
  auto moved = [&](int j) { return static_cast<std::size_t>(j < slot - 1 ? j : j + 2); };

  FunctorElement out;
  for (const auto& [key, c] : lower) {
    if (static_cast<int>(key.size()) != arity) throw ContractViolation("element arity mismatch");
    // x^key = Sym^d(h)(x_1...x_d) with h sending x_k to the k-th variable
    // of the monomial; the datum is pushed forward along h (+) id_2.
    RationalMatrix route(target, static_cast<std::size_t>(d + 2));
    std::size_t k = 0;
    for (int j = 0; j < arity; ++j)
      for (int e = 0; e < key[static_cast<std::size_t>(j)]; ++e) route(moved(j), k++) = 1;
    route(static_cast<std::size_t>(slot - 1), k++) = 1;
    route(static_cast<std::size_t>(slot), k) = 1;
    add_scaled(out, apply_linear(datum_.target, route, datum_.value), c);
  }
  return out;
}

ExtElement ExtensionModule::act(const GeneratorWord& word, const ExtElement& x) const {
  if (x.arity != word.source()) throw ContractViolation("word source differs from arity");
  ExtElement y = x;
  for (const auto& step : word.steps()) {
    if (const auto* g = std::get_if<HopfGenerator>(&step)) {
      const RationalMatrix m = generator_matrix(*g);
      y.lower = apply_linear(lower_kind(), m, y.lower);
      y.upper = apply_linear(upper_kind(), m, y.upper);
      y.arity = target_arity(*g);
    } else {
      const auto& c = std::get<CasimirInsertion>(step);
      y.upper = casimir_action(y.arity, c.slot, y.lower);
      y.lower.clear();
      y.arity += 2;
    }
  }
  return y;
}

ExtensionModule build_extension(int d) {
  if (d < 0) throw ContractViolation("degree must be non-negative");
  const KernelReport k = solve_casimir_constraints(sym(d), sym(d + 2));
  if (k.kernel.size() != 1)
    throw std::logic_error("expected a one-dimensional solution space for Sym^" +
                           std::to_string(d));
  const std::vector<int> all_ones(static_cast<std::size_t>(d + 2), 1);
  auto it = k.kernel.front().find(all_ones);
  if (it == k.kernel.front().end())
    throw std::logic_error("solution has no multilinear term");
  FunctorElement value;
  add_scaled(value, k.kernel.front(), 1 / it->second);
  return ExtensionModule({sym(d), sym(d + 2), std::move(value)});
}

ExtensionModule build_extension_with_datum(int d, FunctorElement value) {
  return ExtensionModule({sym(d), sym(d + 2), std::move(value)});
}

namespace {

WordCombination combination(std::vector<std::pair<Rational, GeneratorWord>> terms,
                            int source, int target) {
  for (const auto& [c, w] : terms)
    if (w.source() != source || w.target() != target)
      throw std::logic_error("relation term has the wrong arities: " + w.str());
  return {source, target, std::move(terms)};
}

GeneratorWord casimir_then(int source, int slot,
                           std::vector<std::pair<GeneratorKind, int>> after = {}) {
  GeneratorWord w(source);
  w.then_casimir(slot);
  for (auto [kind, s] : after) w.then(kind, s);
  return w;
}

WordCombination embed(const WordCombination& r, int left, int right) {
  WordCombination out{r.source + left + right, r.target + left + right, {}};
  for (const auto& [c, w] : r.terms) out.terms.emplace_back(c, w.embedded(left, right));
  return out;
}

}  // namespace

std::vector<CasimirRelation> casimir_relations() {
  using K = GeneratorKind;
  std::vector<CasimirRelation> out;

  out.push_back({"comult-left",
                 combination({{1, casimir_then(0, 1, {{K::comult, 1}})}}, 0, 3),
                 combination({{1, casimir_then(0, 1, {{K::unit, 2}})},
                              {1, casimir_then(0, 1, {{K::unit, 1}})}},
                             0, 3)});

  out.push_back({"casimir-symmetry",
                 combination({{1, casimir_then(0, 1, {{K::swap, 1}})}}, 0, 2),
                 combination({{1, casimir_then(0, 1)}}, 0, 2)});

  // (ad (x) ad)(id (x) P (x) id)(Delta (x) c) = c epsilon.
  GeneratorWord lhs(1);
  lhs.then_casimir(2).then(K::comult, 1).then(K::swap, 2);
  lhs.then_word(adjoint_word(), 0).then_word(adjoint_word(), 1);
  GeneratorWord rhs(1);
  rhs.then(K::counit, 1).then_casimir(1);
  out.push_back({"ad-invariance", combination({{1, lhs}}, 1, 2),
                 combination({{1, rhs}}, 1, 2)});

  out.push_back({"comult-right",
                 combination({{1, casimir_then(0, 1, {{K::comult, 2}})}}, 0, 3),
                 combination({{1, casimir_then(0, 1, {{K::unit, 2}})},
                              {1, casimir_then(0, 1, {{K::unit, 3}})}},
                             0, 3)});

  out.push_back({"counit", combination({{1, casimir_then(0, 1, {{K::counit, 1}})}}, 0, 1),
                 combination({}, 0, 1)});
  return out;
}

namespace {

ExtElement evaluate(const ExtensionModule& ext, const WordCombination& w,
                    const ExtElement& x) {
  ExtElement out{w.target, {}, {}};
  for (const auto& [c, word] : w.terms) {
    const ExtElement y = ext.act(word, x);
    add_scaled(out.lower, y.lower, c);
    add_scaled(out.upper, y.upper, c);
  }
  return out;
}

std::string render(const ExtensionModule& ext, const ExtElement& x) {
  return "(" + render(ext.lower_kind(), x.lower) + ", " + render(ext.upper_kind(), x.upper) +
         ")";
}

std::string render_combination(const WordCombination& w) {
  if (w.terms.empty()) return "0";
  std::string s;
  for (const auto& [c, word] : w.terms) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += c.get_str() + "*";
    s += "[" + word.str() + "]";
  }
  return s;
}

// Basis elements of both summands at the given arity.
std::vector<ExtElement> probe_elements(const ExtensionModule& ext, int arity) {
  std::vector<ExtElement> out;
  for (const auto& key : functor_basis(ext.lower_kind(), arity))
    out.push_back({arity, {{key, Rational(1)}}, {}});
  for (const auto& key : functor_basis(ext.upper_kind(), arity))
    out.push_back({arity, {}, {{key, Rational(1)}}});
  return out;
}

// Compares both sides on every probe; records the first mismatch.
bool compare(const ExtensionModule& ext, const std::string& name, const WordCombination& lhs,
             const WordCombination& rhs, RelationCheck& check) {
  for (const auto& x : probe_elements(ext, lhs.source)) {
    ++check.instances;
    const ExtElement l = evaluate(ext, lhs, x);
    const ExtElement r = evaluate(ext, rhs, x);
    if (l != r) {
      check.passed = false;
      check.relation = name;
      check.context = render_combination(lhs) + " = " + render_combination(rhs);
      check.input = render(ext, x);
      check.left = render(ext, l);
      check.right = render(ext, r);
      return false;
    }
  }
  return true;
}

struct Shape {
  GeneratorKind kind;
  int in;
  int out;
};

constexpr Shape kShapes[] = {
    {GeneratorKind::mult, 2, 1},     {GeneratorKind::unit, 0, 1},
    {GeneratorKind::comult, 1, 2},   {GeneratorKind::counit, 1, 0},
    {GeneratorKind::antipode, 1, 1}, {GeneratorKind::swap, 2, 2},
};

}  // namespace

RelationCheck verify_casimir_relations(const ExtensionModule& ext, int d,
                                       int context_arity_cap) {
  if (d != ext.degree()) throw ContractViolation("degree does not match the extension");
  if (context_arity_cap < d) throw ContractViolation("context cap must be at least d");
  RelationCheck check;

  for (const auto& relation : casimir_relations())
    for (int arity = relation.lhs.source; arity <= context_arity_cap; ++arity)
      for (int left = 0; left <= arity - relation.lhs.source; ++left) {
        const int right = arity - relation.lhs.source - left;
        if (!compare(ext, relation.name, embed(relation.lhs, left, right),
                     embed(relation.rhs, left, right), check))
          return check;
      }

  // A generator on slots [i, i + in) and a Casimir insertion away from its
  // output block commute.
  for (const auto& shape : kShapes)
    for (int arity = shape.in; arity <= context_arity_cap; ++arity) {
      const int last_slot = shape.kind == GeneratorKind::unit ? arity + 1 : arity - shape.in + 1;
      for (int i = 1; i <= last_slot; ++i) {
        const int after = arity - shape.in + shape.out;
        for (int s = 1; s <= after + 1; ++s) {
          if (s > i && s < i + shape.out) continue;
          GeneratorWord first_g(arity);
          first_g.then(shape.kind, i).then_casimir(s);
          GeneratorWord first_c(arity);
          if (s <= i) {
            first_c.then_casimir(s).then(shape.kind, i + 2);
          } else {
            first_c.then_casimir(s - shape.out + shape.in).then(shape.kind, i);
          }
          if (!compare(ext, "interchange", combination({{1, first_g}}, arity, after + 2),
                       combination({{1, first_c}}, arity, after + 2), check))
            return check;
        }
      }
    }
  return check;
}

}  // namespace extschur
