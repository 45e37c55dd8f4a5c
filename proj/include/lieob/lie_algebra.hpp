#ifndef LIEOB_LIE_ALGEBRA_HPP
#define LIEOB_LIE_ALGEBRA_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieob/matrix.hpp"
#include "lieob/subspace.hpp"

namespace lieob {

/// Inputs beyond this dimension are rejected; the Jacobi scan is O(n^6).
inline constexpr std::size_t kMaxDim = 32;

struct JacobiViolation {
  std::size_t i, j, k;
  Element residual;
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Thrown by quotient_algebra when the given subspace is not an ideal.
struct NotAnIdealError : std::runtime_error {
  NotAnIdealError(std::string msg, Element witness_vector, std::size_t basis_index)
      : std::runtime_error(std::move(msg)),
        witness(std::move(witness_vector)),
        escaping_basis_index(basis_index) {}
  Element witness;                 // subspace vector v
  std::size_t escaping_basis_index; // e_i with [v, e_i] outside the subspace
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Brackets are stored only for i < j; antisymmetry is structural.
class LieAlgebra {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Element>;

  LieAlgebra(std::size_t dim, std::vector<std::string> basis_names, BracketTable brackets);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const BracketTable& brackets() const { return brackets_; }

  /// [e_i, e_j] for any index pair, with the sign and diagonal handled.
  Element basis_bracket(std::size_t i, std::size_t j) const;
  Element basis_element(std::size_t i) const;

  /// Bilinear extension of the structure constants.
  Element bracket(const Element& x, const Element& y) const;

 private:
  std::size_t dim_;
  std::vector<std::string> basis_names_;
  BracketTable brackets_; // keyed i < j, values dense length dim_
};

JacobiReport verify_jacobi(const LieAlgebra& g);

/// Kernel of x -> ad(x).
Subspace center(const LieAlgebra& g);

/// Span of all basis brackets [e_i, e_j], i < j.
Subspace derived_subalgebra(const LieAlgebra& g);

/// Adjoint map of x: the matrix with j-th column [x, e_j].
Matrix ad(const LieAlgebra& g, const Element& x);

/// Quotient by an ideal. The quotient basis is the set of non-pivot
/// coordinates of the ideal's reduced basis; the second component is the
/// projection matrix onto those quotient coordinates.
std::pair<LieAlgebra, Matrix> quotient_algebra(const LieAlgebra& g, const Subspace& ideal);

/// Direct sum with zero cross brackets.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Structure constants in the basis given by the columns of p (invertible).
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p);

/// The bracket-closed subspace s as a Lie algebra in its own reduced basis.
/// Throws std::invalid_argument when s is not closed under the bracket.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s,
                      const std::string& name_prefix = "u");

} // namespace lieob

#endif
