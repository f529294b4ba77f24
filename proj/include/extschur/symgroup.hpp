#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

#include "extschur/linalg.hpp"
#include "extschur/partition.hpp"

namespace extschur {

/// Bijection of {1..n}, stored zero-based. Products compose right to left:
/// (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Zero-based images; throws ContractViolation unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// One-based image list, e.g. {2,1,3} for the transposition (12) in S_3.
  static Permutation from_images(std::initializer_list<int> one_based);
  /// Product of one-based cycles, e.g. from_cycles(3, {{1,3,2}}).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// A fixed representative of the conjugacy class with this cycle type:
  /// consecutive letters form each cycle, longest cycle first.
  static Permutation class_representative(const CycleType& type);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  CycleType cycle_type() const;
  int sign() const;
  bool is_identity() const;

  /// Block sum: this on letters 0..n-1, other on letters n..n+m-1.
  Permutation direct_sum(const Permutation& other) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All permutations of degree n in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

/// Finite formal sum of permutations of a common degree with rational
/// coefficients; zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int degree = 0) : degree_(degree) {}
  static GroupAlgebraElement basis(const Permutation& p);

  int degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& p) const;

  void add_term(const Permutation& p, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a);
  friend bool operator==(const GroupAlgebraElement&,
                         const GroupAlgebraElement&) = default;

  /// Coordinates against the lexicographic permutation order, keyed by the
  /// permutation's rank in all_permutations(degree).
  SparseVector coordinates() const;

 private:
  int degree_;
  std::map<Permutation, Rational> terms_;
};

/// Convolution product; degrees must agree.
GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b);
/// Left multiplication by a single permutation.
GroupAlgebraElement multiply(const Permutation& p, const GroupAlgebraElement& a);

/// a on letters 1..deg(a), b on the following deg(b) letters.
GroupAlgebraElement tensor(const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b);

/// Lexicographic rank of a permutation among all permutations of its degree.
std::size_t permutation_rank(const Permutation& p);

struct YoungSymmetrizer {
  Partition lambda;
  GroupAlgebraElement element;
};

/// Unnormalized symmetrizer (sum over row stabilizer) * (signed sum over
/// column stabilizer) of the tableau filled 1,2,... along rows.
YoungSymmetrizer young_symmetrizer(const Partition& lambda);

/// dim K S_n * x, the rank of right multiplication by x on the regular basis.
std::size_t left_ideal_dim(const GroupAlgebraElement& x);

/// {sigma * (c_lambda (x) c_(2)) : sigma in S_{n_total}}, with c_lambda on
/// letters 1..|lambda| and c_(2) on the last two letters. Duplicates are kept.
std::vector<GroupAlgebraElement> right_ideal_with_embedded_symmetrizer(
    const Partition& lambda, int n_total);

/// dim c_mu * span(subspace): the multiplicity of S_mu in the left module
/// spanned by `subspace`.
std::size_t symmetrizer_multiplicity(const Partition& mu,
                                     const std::vector<GroupAlgebraElement>& subspace);

}  // namespace extschur
