#include "lieob/matrix.hpp"

#include <stdexcept>

namespace lieob {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Element>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Element>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Element Matrix::row(std::size_t i) const {
  Element v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Element Matrix::column(std::size_t j) const {
  Element v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Element& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_column(std::size_t j, const Element& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product dimension mismatch: " +
                                std::to_string(cols_) + " vs " + std::to_string(rhs.rows_));
  Matrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += aik * rhs.at(k, j);
    }
  return p;
}

Element Matrix::operator*(const Element& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix-vector dimension mismatch: " +
                                std::to_string(cols_) + " vs " + std::to_string(v.size()));
  Element r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix s(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] + rhs.a_[k];
  return s;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix s(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] - rhs.a_[k];
  return s;
}

Matrix Matrix::operator*(const Rational& scalar) const {
  Matrix s(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] * scalar;
  return s;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_columns) const {
  Matrix m = *this;
  if (pivot_columns) pivot_columns->clear();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    std::size_t r = pivot_row;
    while (r < rows_ && m.at(r, col) == 0) ++r;
    if (r == rows_) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(pivot_row, j));
    Rational inv = Rational(1) / m.at(pivot_row, col);
    for (std::size_t j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(pivot_row, j);
    }
    if (pivot_columns) pivot_columns->push_back(col);
    ++pivot_row;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

Matrix Matrix::kernel() const {
  std::vector<std::size_t> pivots;
  Matrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Element> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    Element v(cols_, Rational(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free_col);
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(basis, cols_);
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  std::vector<std::size_t> pivots;
  Matrix r = aug.rref(&pivots);
  if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= cols_)) return std::nullopt;
  Matrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

Element Matrix::flatten() const { return a_; }

Matrix Matrix::unflatten(const Element& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten size mismatch");
  Matrix m(rows, cols);
  m.a_ = v;
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw std::invalid_argument("vstack column mismatch");
  std::size_t cols = a.rows() ? a.cols() : b.cols();
  Matrix s(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i) s.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) s.set_row(a.rows() + i, b.row(i));
  return s;
}

} // namespace lieob
