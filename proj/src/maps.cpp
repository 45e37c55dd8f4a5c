#include "lieob/maps.hpp"

namespace lieob {

std::vector<Matrix> derivation_space(const LieAlgebra& g) {
  std::size_t n = g.dim();
  // Unknowns: the n^2 entries of D, row-major. For each i < j the identity
  // D[e_i,e_j] = [De_i, e_j] + [e_i, De_j] contributes n linear equations.
  std::size_t pairs = n * (n - 1) / 2;
  Matrix system(pairs * n, n * n);
  std::size_t eq_block = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++eq_block) {
      Element c = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t eq = eq_block * n + k;
        // (D c)_k = sum_l D_{k,l} c_l
        for (std::size_t l = 0; l < n; ++l)
          if (c[l] != 0) system.at(eq, k * n + l) += c[l];
        // [D e_i, e_j]_k = sum_l D_{l,i} [e_l, e_j]_k
        for (std::size_t l = 0; l < n; ++l) {
          Element blj = g.basis_bracket(l, j);
          if (blj[k] != 0) system.at(eq, l * n + i) -= blj[k];
          Element bil = g.basis_bracket(i, l);
          if (bil[k] != 0) system.at(eq, l * n + j) -= bil[k];
        }
      }
    }
  Matrix kernel = system.kernel();
  std::vector<Matrix> basis;
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    basis.push_back(Matrix::unflatten(kernel.row(r), n, n));
  return basis;
}

Subspace inner_derivations(const LieAlgebra& g) {
  std::vector<Element> rows;
  for (std::size_t i = 0; i < g.dim(); ++i) rows.push_back(ad(g, g.basis_element(i)).flatten());
  return Subspace::span(rows, g.dim() * g.dim());
}

AutomorphismCheck is_automorphism(const LieAlgebra& g, const Matrix& phi) {
  std::size_t n = g.dim();
  if (phi.rows() != n || phi.cols() != n)
    throw std::invalid_argument("automorphism candidate must be " + std::to_string(n) + " x " +
                                std::to_string(n));
  if (!phi.inverse()) return {false, std::nullopt};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Element lhs = phi * g.basis_bracket(i, j);
      Element rhs = g.bracket(phi.column(i), phi.column(j));
      if (lhs != rhs) return {false, std::make_pair(i, j)};
    }
  return {true, std::nullopt};
}

Matrix exp_ad(const LieAlgebra& g, const Element& sigma) {
  std::size_t n = g.dim();
  if (n == 0) return Matrix::identity(0);
  Matrix a = ad(g, sigma);
  // Nilpotency index is at most n, so a^n == 0 decides it.
  std::size_t index = 0;
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * a;
    if (power.is_zero()) {
      index = k;
      break;
    }
  }
  if (index == 0)
    throw NotNilpotentError(
        "ad(sigma) is not nilpotent: ad(sigma)^" + std::to_string(n) +
            " is nonzero, so the exponential has no exact finite expansion",
        n);
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  Rational factorial(1);
  for (std::size_t k = 1; k < index; ++k) {
    term = term * a;
    factorial *= Rational(static_cast<unsigned>(k));
    sum = sum + term * (Rational(1) / factorial);
  }
  return sum;
}

SplitData make_split_data(const LieAlgebra& g, const Subspace& center_part,
                          const Subspace& complement_part) {
  std::size_t n = g.dim();
  if (center_part != center(g))
    throw std::invalid_argument("center part does not equal the center of the algebra");
  if (center_part.dim() + complement_part.dim() != n ||
      center_part.intersect(complement_part).dim() != 0)
    throw std::invalid_argument("center and complement do not form a direct sum");
  for (std::size_t r = 0; r < complement_part.dim(); ++r) {
    Element v = complement_part.basis().row(r);
    for (std::size_t i = 0; i < n; ++i)
      if (!complement_part.contains(g.bracket(v, g.basis_element(i))))
        throw std::invalid_argument("complement is not an ideal");
  }
  LieAlgebra g0 = subalgebra(g, complement_part);
  if (center(g0).dim() != 0)
    throw std::invalid_argument("complement has nonzero center as a standalone algebra");

  std::vector<Element> adapted;
  for (std::size_t r = 0; r < center_part.dim(); ++r) adapted.push_back(center_part.basis().row(r));
  for (std::size_t r = 0; r < complement_part.dim(); ++r)
    adapted.push_back(complement_part.basis().row(r));
  Matrix cob = Matrix::from_columns(adapted, n);
  return SplitData{g, center_part, complement_part, cob, std::move(g0)};
}

std::pair<BlockDecomposition, BlockVerdicts> block_decompose(const SplitData& split,
                                                             const Matrix& phi) {
  const LieAlgebra& g = split.algebra;
  auto check = is_automorphism(g, phi);
  if (!check.ok)
    throw std::invalid_argument("block decomposition requires an automorphism");
  Matrix cob_inv = *split.change_of_basis.inverse();
  Matrix adapted = cob_inv * phi * split.change_of_basis;
  std::size_t dz = split.center_part.dim();
  std::size_t d0 = split.complement_part.dim();
  BlockDecomposition blocks{Matrix(dz, dz), Matrix(dz, d0), Matrix(d0, dz), Matrix(d0, d0)};
  for (std::size_t i = 0; i < dz; ++i)
    for (std::size_t j = 0; j < dz; ++j) blocks.phi11.at(i, j) = adapted.at(i, j);
  for (std::size_t i = 0; i < dz; ++i)
    for (std::size_t j = 0; j < d0; ++j) blocks.phi12.at(i, j) = adapted.at(i, dz + j);
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < dz; ++j) blocks.phi21.at(i, j) = adapted.at(dz + i, j);
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < d0; ++j) blocks.phi22.at(i, j) = adapted.at(dz + i, dz + j);

  BlockVerdicts verdicts{};
  verdicts.phi21_zero = blocks.phi21.is_zero();
  verdicts.phi22_automorphism_of_g0 =
      d0 == 0 || is_automorphism(split.complement_algebra, blocks.phi22).ok;
  // phi12 must vanish columnwise on a basis of [g0, g0] (in g0 coordinates).
  Subspace derived0 = derived_subalgebra(split.complement_algebra);
  verdicts.phi12_kills_derived = true;
  for (std::size_t r = 0; r < derived0.dim(); ++r)
    if (!is_zero_vector(blocks.phi12 * derived0.basis().row(r)))
      verdicts.phi12_kills_derived = false;
  return {std::move(blocks), verdicts};
}

Matrix induced_quotient_automorphism(const LieAlgebra& g, const Matrix& phi) {
  auto check = is_automorphism(g, phi);
  if (!check.ok) throw std::invalid_argument("induced quotient map requires an automorphism");
  Subspace zg = center(g);
  for (std::size_t r = 0; r < zg.dim(); ++r)
    if (!zg.contains(phi * zg.basis().row(r)))
      throw std::logic_error("automorphism does not preserve the center; this violates an "
                             "internal invariant");
  auto [quotient, projection] = quotient_algebra(g, zg);
  std::size_t n = g.dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : zg.pivot_columns()) is_pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) kept.push_back(i);
  Matrix induced(quotient.dim(), quotient.dim());
  for (std::size_t a = 0; a < kept.size(); ++a)
    induced.set_column(a, projection * phi.column(kept[a]));
  return induced;
}

AutOutReport aut_out_description(const SplitData& split) {
  std::size_t dz = split.center_part.dim();
  std::size_t codim =
      split.complement_algebra.dim() - derived_subalgebra(split.complement_algebra).dim();
  return AutOutReport{
      dz * dz,
      codim * dz,
      codim,
      {"GL(Zg)", "Hom(g0/[g0,g0], Zg)", "Aut(g0)/Inn(g0)"},
  };
}

} // namespace lieob
