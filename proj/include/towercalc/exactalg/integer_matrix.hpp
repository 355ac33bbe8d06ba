#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace towercalc::exactalg {

using Integer = mpz_class;
using IntegerVector = std::vector<Integer>;

/// Dense arbitrary-precision integer matrix, row-major.
///
/// Maps between free modules act on column vectors: column j of a map
/// holds the image of generator j.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntegerMatrix diagonal(std::size_t rows, std::size_t cols, const IntegerVector& d);
  static IntegerMatrix column_vector(const IntegerVector& v);
  static IntegerMatrix from_columns(std::size_t rows, const std::vector<IntegerVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntegerVector column(std::size_t c) const;
  IntegerVector row(std::size_t r) const;
  IntegerMatrix column_range(std::size_t begin, std::size_t end) const;
  IntegerMatrix row_range(std::size_t begin, std::size_t end) const;
  IntegerMatrix transpose() const;

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  // Elementary operations, used by the reduction kernels.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v);
IntegerMatrix scaled(const IntegerMatrix& a, const Integer& factor);

/// [a | b]; both must have the same row count.
IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
/// [a ; b]; both must have the same column count.
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);
/// diag(a, b).
IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b);

bool is_zero(const IntegerVector& v);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);
std::string to_string(const IntegerMatrix& m);

}  // namespace towercalc::exactalg
