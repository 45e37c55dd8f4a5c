#ifndef LIEOB_MAPS_HPP
#define LIEOB_MAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieob/lie_algebra.hpp"

namespace lieob {

/// Basis of Der(g): all D with D[x,y] = [Dx,y] + [x,Dy].
std::vector<Matrix> derivation_space(const LieAlgebra& g);

/// Span of {ad(e_i)} inside End(g), flattened row-major to n^2-vectors.
Subspace inner_derivations(const LieAlgebra& g);

struct AutomorphismCheck {
  bool ok;
  // First violating basis pair when the bracket relation fails; unset when
  // the map is simply singular.
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
};

AutomorphismCheck is_automorphism(const LieAlgebra& g, const Matrix& phi);

/// Thrown by exp_ad when ad(sigma) is not nilpotent.
struct NotNilpotentError : std::runtime_error {
  NotNilpotentError(std::string msg, std::size_t power)
      : std::runtime_error(std::move(msg)), stable_nonzero_power(power) {}
  std::size_t stable_nonzero_power;
};

/// exp(ad(sigma)) as the exact finite sum, defined only for nilpotent ad(sigma).
Matrix exp_ad(const LieAlgebra& g, const Element& sigma);

/// Decomposition g = Zg (+) g0 with g0 an ideal whose own center is zero.
/// change_of_basis carries adapted coordinates (center block first) to
/// standard coordinates: its columns are the adapted basis vectors.
struct SplitData {
  LieAlgebra algebra;
  Subspace center_part;
  Subspace complement_part;
  Matrix change_of_basis;
  LieAlgebra complement_algebra; // g0 in its own reduced basis
};

/// Validates all SplitData invariants; throws std::invalid_argument on failure.
SplitData make_split_data(const LieAlgebra& g, const Subspace& center_part,
                          const Subspace& complement_part);

struct BlockDecomposition {
  Matrix phi11; // Zg -> Zg
  Matrix phi12; // g0 -> Zg
  Matrix phi21; // Zg -> g0
  Matrix phi22; // g0 -> g0
};

struct BlockVerdicts {
  bool phi21_zero;
  bool phi22_automorphism_of_g0;
  bool phi12_kills_derived;
  bool all() const { return phi21_zero && phi22_automorphism_of_g0 && phi12_kills_derived; }
};

/// Blocks of phi in adapted coordinates. For a genuine automorphism of a
/// genuine split all three verdicts hold. Throws when phi is not an
/// automorphism.
std::pair<BlockDecomposition, BlockVerdicts> block_decompose(const SplitData& split,
                                                             const Matrix& phi);

/// The map phi induces on g/Zg. Asserts phi(Zg) <= Zg (a theorem for
/// automorphisms; violation signals a bug) and returns the quotient matrix.
Matrix induced_quotient_automorphism(const LieAlgebra& g, const Matrix& phi);

/// Dimension report for the blocks of Aut(g)/Inn(g) over a split:
/// GL(Zg), Hom(g0/[g0,g0], Zg), Aut(g0)/Inn(g0).
struct AutOutReport {
  std::size_t dim_gl_center;       // (dim Zg)^2
  std::size_t dim_hom_block;       // dim(g0/[g0,g0]) * dim Zg
  std::size_t derived_codim_in_g0; // dim(g0/[g0,g0])
  std::vector<std::string> block_names;
};

AutOutReport aut_out_description(const SplitData& split);

} // namespace lieob

#endif
