#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "extschur/linalg.hpp"

namespace extschur {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of zero.
class Partition {
 public:
  Partition() = default;
  /// Throws ContractViolation unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  static Partition row(int n);     ///< (n), or the empty partition for n = 0
  static Partition column(int n);  ///< (1^n)

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  bool is_row() const { return length() <= 1; }
  bool is_column() const;
  bool contains(const Partition& inner) const;
  Partition conjugate() const;

  /// Comma-separated parts, e.g. "3,1,1"; the empty partition renders as "".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Graded reverse-lexicographic order: smaller size first, then larger
  /// parts first within a size, so (4) < (3,1) < (2,2).
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A conjugacy class of the symmetric group, labelled by its cycle type.
using CycleType = Partition;

/// Parses "3,1,1"; "" and "0" denote the empty partition. Throws
/// std::invalid_argument on malformed or non-decreasing input.
Partition parse_partition(std::string_view text);

/// All partitions of n, largest first in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
/// All partitions of sizes 0..max_size, grouped by size.
std::vector<Partition> partitions_up_to(int max_size);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// Number of standard tableaux of shape lambda, via the hook length formula.
std::uint64_t hook_dimension(const Partition& lambda);

/// Littlewood-Richardson coefficient LR^lambda_{rho,nu}, counted as
/// semistandard fillings of lambda/rho with content nu whose reverse reading
/// word is a lattice word.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& rho,
                             const Partition& nu);

/// Partitions obtained from rho by adding a horizontal strip of k boxes.
std::vector<Partition> pieri_add_horizontal(const Partition& rho, int k);
/// Partitions rho with lambda/rho a vertical strip of k boxes.
std::vector<Partition> pieri_remove_vertical(const Partition& lambda, int k);

/// Irreducible character chi_lambda on the class of the given cycle type,
/// by the Murnaghan-Nakayama rule.
std::int64_t character_value(const Partition& lambda, const CycleType& cls);

/// Size of the conjugacy class with this cycle type, n!/z.
std::uint64_t class_size(const CycleType& cls);

/// Character table of S_n: rows follow enumerate_partitions(n) for the
/// irreducibles, columns follow enumerate_partitions(n) for the classes.
/// Tables are computed once per n and shared; safe to call concurrently.
const std::vector<std::vector<std::int64_t>>& character_table(int n);

/// dim S^lambda(V) for dim V = k: the number of semistandard tableaux of
/// shape lambda with entries in 1..k (hook-content formula).
std::uint64_t schur_dim(const Partition& lambda, int k);

}  // namespace extschur
