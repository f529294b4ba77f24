#pragma once

#include <string>
#include <vector>

#include "extschur/polyfunctor.hpp"

namespace extschur {

/// The image of the source generator x_1...x_d under id_d (x) c, a vector
/// of the target functor at arity d + 2.
struct ExtensionDatum {
  FunctorKind source;
  FunctorKind target;
  FunctorElement value;
};

/// An element of F(K^arity) = Sym^d(K^arity) (+) Sym^(d+2)(K^arity).
struct ExtElement {
  int arity = 0;
  FunctorElement lower;  ///< Sym^d component
  FunctorElement upper;  ///< Sym^(d+2) component
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// Extension of Sym^d by Sym^(d+2) determined by a datum. Degree-zero words
/// act diagonally; a Casimir insertion sends the lower component into the
/// upper one through the datum and kills the upper component.
class ExtensionModule {
 public:
  explicit ExtensionModule(ExtensionDatum datum);

  int degree() const { return datum_.source.degree; }
  const ExtensionDatum& datum() const { return datum_; }
  FunctorKind lower_kind() const { return datum_.source; }
  FunctorKind upper_kind() const { return datum_.target; }

  ExtElement act(const GeneratorWord& word, const ExtElement& x) const;

  /// id_(slot-1) (x) c (x) id_(arity-slot+1) applied to a lower element at
  /// `arity`, giving an upper element at arity + 2.
  FunctorElement casimir_action(int arity, int slot, const FunctorElement& lower) const;

 private:
  ExtensionDatum datum_;
};

/// Solves the constraint system and normalizes the kernel generator so the
/// coefficient of x_1...x_(d+2) is one.
ExtensionModule build_extension(int d);
/// Same module shape with an arbitrary datum, e.g. to probe the checker.
ExtensionModule build_extension_with_datum(int d, FunctorElement value);

/// A linear combination of generator words with common source and target.
struct WordCombination {
  int source = 0;
  int target = 0;
  std::vector<std::pair<Rational, GeneratorWord>> terms;
};

/// A defining relation lhs = rhs of the Casimir Hopf structure.
struct CasimirRelation {
  std::string name;
  WordCombination lhs;
  WordCombination rhs;
};

/// The relations checked, in checking order: comult-left, casimir-symmetry,
/// ad-invariance, comult-right, counit.
std::vector<CasimirRelation> casimir_relations();

struct RelationCheck {
  bool passed = true;
  std::string relation;  ///< name of the first failing relation
  std::string context;   ///< the embedded instance that failed
  std::string input;     ///< basis element it was evaluated on
  std::string left;
  std::string right;
  std::size_t instances = 0;  ///< instances evaluated
};

/// Evaluates every relation tensored with identities on both sides, up to
/// total source arity `context_arity_cap`, on every basis element of both
/// summands; then checks interchange of each generator with a Casimir
/// insertion in the same range. Stops at the first mismatch.
RelationCheck verify_casimir_relations(const ExtensionModule& ext, int d,
                                       int context_arity_cap);

}  // namespace extschur
