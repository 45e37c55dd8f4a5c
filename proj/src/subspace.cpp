#include "lieob/subspace.hpp"

#include <stdexcept>

namespace lieob {

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  std::vector<std::size_t> pivots;
  Matrix r = rows.rref(&pivots);
  Matrix trimmed(pivots.size(), rows.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) trimmed.set_row(i, r.row(i));
  s.basis_ = trimmed;
  s.pivots_ = pivots;
  return s;
}

Subspace Subspace::span(const std::vector<Element>& rows, std::size_t ambient_dim) {
  return span(Matrix::from_rows(rows, ambient_dim));
}

bool Subspace::contains(const Element& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Element> Subspace::coordinates(const Element& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  // For an RREF basis the candidate coefficients are read off the pivot columns.
  Element coeffs(dim());
  Element residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    coeffs[i] = residual[pivots_[i]];
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= coeffs[i] * basis_.at(i, j);
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  return coeffs;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  return span(vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  if (dim() == 0 || other.dim() == 0) return zero(ambient_);
  // Coefficient pairs (l, m) with l*A = m*B form the left null space of [A; B]
  // with the B block negated; the intersection is spanned by the l*A values.
  Matrix stacked = vstack(basis_, other.basis_);
  Matrix coeff_kernel = stacked.transpose().kernel();
  std::vector<Element> vectors;
  for (std::size_t r = 0; r < coeff_kernel.rows(); ++r) {
    Element v(ambient_, Rational(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      const Rational& c = coeff_kernel.at(r, i);
      if (c == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] += c * basis_.at(i, j);
    }
    vectors.push_back(std::move(v));
  }
  return span(vectors, ambient_);
}

} // namespace lieob
