#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "df/integer.hpp"

namespace df {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data);

  static IntegerMatrix identity(std::size_t n);
  /// Row-major initializer, convenient in tests: {{1,2},{3,4}}.
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  IntegerMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Square input only.
Int determinant(IntegerMatrix m);

/// Column-compressed-by-row sparse matrix: each row holds (column, value) pairs
/// sorted by column with no explicit zeros. Used for boundary operators, which
/// are far too large to store densely for the complexes we handle.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Int>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseMatrix from_dense(const IntegerMatrix& m);
  IntegerMatrix to_dense() const;

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  /// Adds `value` to entry (r, c); keeps the row sorted and drops cancellations.
  void add(std::size_t r, std::size_t c, const Int& value);
  Int at(std::size_t r, std::size_t c) const;

  const Row& row(std::size_t r) const { return data_[r]; }
  Row& row(std::size_t r) { return data_[r]; }

  bool is_zero() const;
  SparseMatrix transposed() const;
  SparseMatrix negated() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

}  // namespace df
