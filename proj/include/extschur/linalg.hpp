#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace extschur {

/// Exact rational number. GMP keeps mpq values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(long numerator, long denominator = 1);
std::string to_string(const Rational& q);

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                  std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalMatrix transpose() const;
  RationalVector column(std::size_t c) const;
  RationalVector apply(const RationalVector& v) const;
  bool is_zero() const;

  /// Appends the rows of `other` below this matrix; column counts must match.
  void append_rows(const RationalMatrix& other);

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix scale(const RationalMatrix& m, const Rational& s);

/// Reduced row echelon form with the pivot columns in increasing order.
struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivot choice is the first nonzero entry at or
/// below the current row in the leftmost unprocessed column, so the output
/// does not depend on thread count. Row updates run under OpenMP.
Echelon row_reduce(RationalMatrix m);
/// Single-threaded reference for `row_reduce`; same pivots, same output.
Echelon row_reduce_serial(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
std::optional<RationalVector> solve_consistent(const RationalMatrix& m,
                                               const RationalVector& rhs);

/// Sparse vector keyed by coordinate index.
using SparseVector = std::map<std::size_t, Rational>;

/// Incrementally maintained echelon basis of a subspace spanned by sparse
/// vectors. Each stored row has a distinct leading index and a leading
/// coefficient of one.
class SparseEchelonBasis {
 public:
  /// Reduces `v` against the basis and stores the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVector> rows_;
};

/// Basis of the null space of the rows held in `basis`, over `cols`
/// coordinates. Same normalization as kernel_basis: one vector per free
/// column, with a one in that column.
std::vector<SparseVector> sparse_kernel_basis(const SparseEchelonBasis& basis,
                                              std::size_t cols);

}  // namespace extschur
