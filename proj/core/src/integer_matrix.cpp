#include "df/integer_matrix.hpp"

#include <algorithm>
#include <map>

#include "df/errors.hpp"

namespace df {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw InvalidArgument("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                          std::to_string(rows_ * cols_));
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

bool IntegerMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Int& s = (*this)(src, j);
    if (s != 0) (*this)(dst, j) += factor * s;
  }
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Int& s = (*this)(i, src);
    if (s != 0) (*this)(i, dst) += factor * s;
  }
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Int& y = b(k, j);
        if (y != 0) c(i, j) += x * y;
      }
    }
  return c;
}

Int determinant(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SparseMatrix SparseMatrix::from_dense(const IntegerMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.data_[i].emplace_back(j, m(i, j));
  return s;
}

IntegerMatrix SparseMatrix::to_dense() const {
  IntegerMatrix m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : data_[i]) m(i, j) = v;
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Int& value) {
  if (r >= rows() || c >= cols_) throw InvalidArgument("sparse matrix index out of range");
  if (value == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, Entry{c, value});
  }
}

Int SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  return t;
}

SparseMatrix SparseMatrix::negated() const {
  SparseMatrix n = *this;
  for (auto& r : n.data_)
    for (auto& e : r) e.second = -e.second;
  return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("sparse product dimension mismatch");
  SparseMatrix c(a.rows(), b.cols());
  std::map<std::size_t, Int> acc;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    acc.clear();
    for (const auto& [k, x] : a.row(i))
      for (const auto& [j, y] : b.row(k)) acc[j] += x * y;
    for (auto& [j, v] : acc)
      if (v != 0) c.row(i).emplace_back(j, std::move(v));
  }
  return c;
}

}  // namespace df
