#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "extschur/linalg.hpp"

namespace extschur {

// Hopf generators act on the dual abelianization by linear substitutions of
// the coordinate variables x_1..x_a. Slots are 1-based throughout.

enum class GeneratorKind { mult, unit, comult, counit, antipode, swap };

/// One generator tensored with identities: `slot` is the first slot it
/// touches, `arity` the number of slots before it is applied.
struct HopfGenerator {
  GeneratorKind kind;
  int slot;
  int arity;
  friend bool operator==(const HopfGenerator&, const HopfGenerator&) = default;
};

int target_arity(const HopfGenerator& g);
/// Throws ContractViolation when the slot is out of range for the kind.
void validate(const HopfGenerator& g);
std::string to_string(const HopfGenerator& g);

/// Matrix of the generator on coordinate spaces, (target arity) x (arity);
/// column j is the image of x_j.
RationalMatrix generator_matrix(const HopfGenerator& g);

/// Inserts the Casimir 2-tensor as new slots `slot`, `slot + 1`.
struct CasimirInsertion {
  int slot;
  int arity;
  friend bool operator==(const CasimirInsertion&, const CasimirInsertion&) = default;
};

using WordStep = std::variant<HopfGenerator, CasimirInsertion>;

/// A composite of generators, listed in application order.
class GeneratorWord {
 public:
  explicit GeneratorWord(int source_arity) : source_(source_arity), target_(source_arity) {}

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<WordStep>& steps() const { return steps_; }
  int casimir_count() const;

  /// Appends a generator at the current target arity.
  GeneratorWord& then(GeneratorKind kind, int slot);
  GeneratorWord& then_casimir(int slot);
  /// Appends `other`, shifted right by `offset` slots, with `offset` slots
  /// on the left and whatever remains on the right held fixed.
  GeneratorWord& then_word(const GeneratorWord& other, int offset);

  /// id_left (x) this (x) id_right.
  GeneratorWord embedded(int left, int right) const;
  std::string str() const;

 private:
  void push(WordStep step);
  int source_;
  int target_;
  std::vector<WordStep> steps_;
};

/// ad = mu (mu (x) id)(id_2 (x) S)(id (x) P)(Delta (x) id), 2 -> 1.
GeneratorWord adjoint_word();

/// Product of the generator matrices; the word must not insert Casimirs.
RationalMatrix word_matrix(const GeneratorWord& w);

enum class FunctorFamily { symmetric, exterior };

struct FunctorKind {
  FunctorFamily family;
  int degree;
  friend bool operator==(const FunctorKind&, const FunctorKind&) = default;
};

std::string to_string(const FunctorKind& kind);

/// Basis keys of the functor evaluated on K^arity. Symmetric powers use
/// exponent vectors in lexicographic monomial order (x1^d first); exterior
/// powers use increasing 0-based index sets in lexicographic order.
const std::vector<std::vector<int>>& functor_basis(const FunctorKind& kind, int arity);
std::size_t functor_dim(const FunctorKind& kind, int arity);

/// Sparse element of a functor value, keyed as in functor_basis.
using FunctorElement = std::map<std::vector<int>, Rational>;

/// Image of `x` (in the functor on K^linear.cols()) under the induced map of
/// `linear`.
FunctorElement apply_linear(const FunctorKind& kind, const RationalMatrix& linear,
                            const FunctorElement& x);

RationalVector to_vector(const FunctorKind& kind, int arity, const FunctorElement& x);
FunctorElement from_vector(const FunctorKind& kind, int arity, const RationalVector& v);

/// Induced matrix on the monomial or wedge basis.
RationalMatrix functor_matrix(const FunctorKind& kind, const RationalMatrix& linear);

/// "x1*x2^2*x3" for symmetric keys, "x1^x3" for exterior keys.
std::string render(const FunctorKind& kind, const FunctorElement& x);

/// The canonical generator: x_1 ... x_d (symmetric) or x_1 ^ ... ^ x_l
/// (exterior), living at arity equal to the degree.
FunctorElement canonical_generator(const FunctorKind& kind);

/// Rows C with C v = 0 exactly for the degree-one data v = F(id_l (x) c)(x)
/// compatible with the Casimir relations: symmetry of the Casimir slots,
/// comultiplication and counit at both Casimir slots, the comultiplication
/// and counit compatibilities at each source slot, and source symmetry.
/// The unknown lives in the target functor on K^(l+2), l = source degree.
RationalMatrix casimir_constraint_matrix(const FunctorKind& source,
                                         const FunctorKind& target);

struct KernelReport {
  FunctorKind source;
  FunctorKind target;
  int arity;  ///< arity of the unknown, source degree + 2
  std::vector<FunctorElement> kernel;
};

/// Kernel of the constraint system, computed by sparse elimination.
KernelReport solve_casimir_constraints(const FunctorKind& source,
                                       const FunctorKind& target);

}  // namespace extschur
