#ifndef LIEOB_SUBSPACE_HPP
#define LIEOB_SUBSPACE_HPP

#include <optional>
#include <vector>

#include "lieob/matrix.hpp"

namespace lieob {

/// Subspace of Q^n held as a reduced row-echelon basis with full row rank.
/// Two subspaces are equal iff their reduced bases are identical matrices.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row span of the given matrix.
  static Subspace span(const Matrix& rows);
  static Subspace span(const std::vector<Element>& rows, std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  bool contains(const Element& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the reduced basis rows, or nullopt when v is outside.
  std::optional<Element> coordinates(const Element& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

} // namespace lieob

#endif
