#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace maninlab {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

// Dense row-major matrix over Z.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix diagonal(std::span<const Integer> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row dst += q * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q);
  // col dst += q * col src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Integer> x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

// Fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& a);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntVector to_int_vector(std::initializer_list<long> values);
bool is_zero_vector(std::span<const Integer> v);

}  // namespace maninlab
