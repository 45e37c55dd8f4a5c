#ifndef LIEOB_MATRIX_HPP
#define LIEOB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lieob/rational.hpp"

namespace lieob {

/// Dense rational matrix. All arithmetic is exact.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Element>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Element>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Element row(std::size_t i) const;
  Element column(std::size_t j) const;
  void set_row(std::size_t i, const Element& v);
  void set_column(std::size_t j, const Element& v);

  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  Element operator*(const Element& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Rational& scalar) const;
  bool operator==(const Matrix& rhs) const = default;

  /// Reduced row echelon form. Pivot choice: first nonzero column,
  /// topmost available row. Deterministic, so RREF is a canonical form.
  Matrix rref(std::vector<std::size_t>* pivot_columns = nullptr) const;

  std::size_t rank() const;

  /// Rows span the right null space {v : A v = 0}, in RREF order.
  Matrix kernel() const;

  std::optional<Matrix> inverse() const;

  /// Row-major flattening, e.g. for viewing endomorphisms as n^2-vectors.
  Element flatten() const;
  static Matrix unflatten(const Element& v, std::size_t rows, std::size_t cols);

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Stacks b below a (column counts must match).
Matrix vstack(const Matrix& a, const Matrix& b);

} // namespace lieob

#endif
