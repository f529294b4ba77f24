#include "extschur/linalg.hpp"

#include <utility>

namespace extschur {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw ContractViolation("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ContractViolation("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ContractViolation("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw ContractViolation("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(data_[r * cols_ + c]) != 0 && sgn(v[c]) != 0)
        out[r] += data_[r * cols_ + c] * v[c];
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : data_)
    if (sgn(q) != 0) return false;
  return true;
}

void RationalMatrix::append_rows(const RationalMatrix& other) {
  if (rows_ == 0 && cols_ == 0) {
    *this = other;
    return;
  }
  if (other.cols_ != cols_) throw ContractViolation("column count mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractViolation("product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ContractViolation("sum shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ContractViolation("difference shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RationalMatrix scale(const RationalMatrix& m, const Rational& s) {
  RationalMatrix out = m;
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) *= s;
  return out;
}

namespace {

template <bool Parallel>
Echelon gauss_jordan(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r)
      if (sgn(m(r, c)) != 0) {
        found = r;
        break;
      }
    if (found == rows) continue;
    if (found != pivot_row)
      for (std::size_t j = c; j < cols; ++j) swap(m(found, j), m(pivot_row, j));
    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) m(pivot_row, j) *= inv;

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows);
    const std::size_t p = pivot_row;
#pragma omp parallel for schedule(static) if (Parallel && rows * cols > 4096)
    for (std::ptrdiff_t ri = 0; ri < n; ++ri) {
      const auto r = static_cast<std::size_t>(ri);
      if (r == p || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(p, j)) != 0) m(r, j) -= factor * m(p, j);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Echelon row_reduce(RationalMatrix m) { return gauss_jordan<true>(std::move(m)); }

Echelon row_reduce_serial(RationalMatrix m) {
  return gauss_jordan<false>(std::move(m));
}

std::size_t rank(const RationalMatrix& m) {
  // Eliminating along the shorter side is cheaper; rank is transpose-invariant.
  if (m.rows() > m.cols()) return row_reduce(m.transpose()).pivots.size();
  return row_reduce(m).pivots.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_consistent(const RationalMatrix& m,
                                               const RationalVector& rhs) {
  if (rhs.size() != m.rows()) throw ContractViolation("rhs length != rows");
  const std::size_t cols = m.cols();
  RationalMatrix augmented(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) augmented(r, c) = m(r, c);
    augmented(r, cols) = rhs[r];
  }
  const Echelon e = row_reduce(std::move(augmented));
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  // Free variables are set to zero.
  RationalVector x(cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x[e.pivots[i]] = e.reduced(i, cols);
  return x;
}

bool SparseEchelonBasis::insert(SparseVector v) {
  for (auto it = v.begin(); it != v.end();) {
    if (sgn(it->second) == 0) {
      it = v.erase(it);
    } else {
      ++it;
    }
  }
  while (!v.empty()) {
    const std::size_t lead = v.begin()->first;
    auto row = rows_.find(lead);
    if (row == rows_.end()) {
      const Rational inv = 1 / v.begin()->second;
      for (auto& [idx, coeff] : v) coeff *= inv;
      rows_.emplace(lead, std::move(v));
      return true;
    }
    const Rational factor = v.begin()->second;
    for (const auto& [idx, coeff] : row->second) {
      Rational& slot = v[idx];
      slot -= factor * coeff;
      if (sgn(slot) == 0) v.erase(idx);
    }
  }
  return false;
}

std::vector<SparseVector> sparse_kernel_basis(const SparseEchelonBasis& basis,
                                              std::size_t cols) {
  std::map<std::size_t, SparseVector> rows = basis.rows();
  // Back substitution: clear each pivot column from the rows above it.
  for (auto pivot = rows.rbegin(); pivot != rows.rend(); ++pivot) {
    const std::size_t p = pivot->first;
    for (auto& [lead, row] : rows) {
      if (lead >= p) break;
      auto hit = row.find(p);
      if (hit == row.end()) continue;
      const Rational factor = hit->second;
      for (const auto& [idx, coeff] : pivot->second) {
        Rational& slot = row[idx];
        slot -= factor * coeff;
        if (sgn(slot) == 0) row.erase(idx);
      }
    }
  }
  std::vector<SparseVector> kernel;
  for (std::size_t free = 0; free < cols; ++free) {
    if (rows.count(free)) continue;
    SparseVector v;
    v.emplace(free, 1);
    for (const auto& [lead, row] : rows)
      if (auto it = row.find(free); it != row.end()) v.emplace(lead, -it->second);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace extschur
