#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "extschur/linalg.hpp"
#include "extschur/symgroup.hpp"

namespace extschur {

/// Binary bracket tree with leaves labelled 1..k, each label used once.
class BracketTree {
 public:
  static BracketTree leaf(int label);
  static BracketTree bracket(const BracketTree& left, const BracketTree& right);
  /// Parses "[[1,2],3]"; bare integers are leaves.
  static BracketTree parse(std::string_view text);
  /// [[...[first, rest_0], rest_1], ...].
  static BracketTree left_normed(const std::vector<int>& labels);

  bool is_leaf() const { return !left_; }
  int label() const { return label_; }
  const BracketTree& left() const { return *left_; }
  const BracketTree& right() const { return *right_; }

  /// Leaf labels in left-to-right order.
  std::vector<int> labels() const;
  std::string str() const;

 private:
  BracketTree() = default;
  int label_ = 0;
  std::shared_ptr<const BracketTree> left_, right_;
};

/// Multilinear element of the tensor algebra: words in the letters 1..k,
/// each letter once, with rational coefficients. Zero terms are not stored.
using MultilinearPoly = std::map<std::vector<int>, Rational>;

/// Associative expansion: [a,b] = ab - ba, recursively. Throws
/// ContractViolation when a label repeats.
MultilinearPoly expand_bracket(const BracketTree& t);

/// The left-normed basis of Lie(k): [[...[1, s_2], ...], s_k] for the
/// permutations (s_2..s_k) of {2..k} in lexicographic order.
std::vector<BracketTree> lie_basis(int k);

/// Rank of the span of the left-normed expansions in the multilinear space.
std::uint64_t lie_dim(int k);

/// Coefficients of a Lie element against lie_basis(k), found by solving
/// against the basis expansions. Throws std::logic_error if `p` is not in
/// the span (which would mean `p` is not a Lie element).
RationalVector rewrite_to_basis(const MultilinearPoly& p, int k);
RationalVector rewrite_to_basis(const BracketTree& t);

/// Matrix of relabelling leaves by `relabel` (letter i goes to relabel(i))
/// on Lie(k) in the left-normed basis. Cached; safe to call concurrently.
const RationalMatrix& lie_action(const Permutation& relabel);

/// Basis element of catLie(n, m): a surjection from the n inputs onto the
/// m outputs together with a left-normed basis index for each output slot.
/// Inputs in a fibre are identified with 1..k in increasing order.
struct CatLieBasisElement {
  std::vector<int> fiber_assignment;  ///< input j (0-based) -> output slot
  std::vector<int> slot_basis;        ///< index into lie_basis(|fibre|)
  friend auto operator<=>(const CatLieBasisElement&,
                          const CatLieBasisElement&) = default;
};

/// All surjections {0..n-1} -> {0..m-1}, lexicographic.
std::vector<std::vector<int>> surjections(int n, int m);

/// dim catLie(sources, targets) = sum over surjections of prod (|fibre| - 1)!.
std::uint64_t catlie_dim(int sources, int targets);

/// Explicit basis of catLie(n, m), surjections lexicographic then basis
/// indices lexicographic.
std::vector<CatLieBasisElement> catlie_basis(int n, int m);

/// Trace of v -> sigma . v . tau on catLie(n, m): tau relabels the n inputs,
/// sigma relabels the m output slots.
Rational bimodule_trace(int n, int m, const Permutation& sigma,
                        const Permutation& tau);

}  // namespace extschur
