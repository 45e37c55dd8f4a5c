#ifndef LIEOB_COHOMOLOGY_HPP
#define LIEOB_COHOMOLOGY_HPP

#include <vector>

#include "lieob/lie_algebra.hpp"

namespace lieob {

/// Finite-dimensional module over a Lie algebra, given by the action of each
/// basis element. The representation identity is verified at construction.
class LieModule {
 public:
  LieModule(LieAlgebra algebra, std::vector<Matrix> action);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t module_dim() const { return module_dim_; }
  const Matrix& action(std::size_t basis_index) const { return action_.at(basis_index); }

  /// Action of an arbitrary element, extended linearly.
  Matrix action_of(const Element& x) const;

 private:
  LieAlgebra algebra_;
  std::size_t module_dim_;
  std::vector<Matrix> action_;
};

LieModule trivial_module(const LieAlgebra& g, std::size_t module_dim = 1);
LieModule adjoint_module(const LieAlgebra& g);

/// Number of k-cochains: C(n, k) * module_dim.
std::size_t cochain_dim(const LieModule& m, std::size_t k);

/// Matrix of the Chevalley-Eilenberg differential C^k -> C^{k+1} on the
/// lexicographic basis of k-index subsets, module index fastest. Signs:
/// action term (-1)^{i+1}, contraction term (-1)^{i+j} (1-based positions).
Matrix ce_differential(const LieModule& m, std::size_t k);

/// dim ker(d_k) - rank(d_{k-1}); d_{-1} is the zero map.
std::size_t cohomology_dim(const LieModule& m, std::size_t k);

bool is_closed(const LieModule& m, std::size_t k, const Element& cochain);

} // namespace lieob

#endif
