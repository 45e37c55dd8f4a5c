#ifndef LIEOB_TESTS_SAMPLING_HPP
#define LIEOB_TESTS_SAMPLING_HPP

// Deterministic random generators shared by the unit and acceptance suites.
// Automorphism sampling follows the documented strategy: exponentials of
// nilpotent adjoints, center-block GL elements, hom-block shears, explicit
// verified maps, and random compositions of those.

#include <random>

#include "lieob/maps.hpp"
#include "lieob/obstruction.hpp"

namespace lieob::testing {

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational small_rational(bool nonzero = false) {
    long num = pick(-4, 4);
    if (nonzero)
      while (num == 0) num = pick(-4, 4);
    long den = pick(1, 3);
    return Rational(num, den);
  }

  Element element(std::size_t n, bool nonzero = false) {
    Element v(n);
    for (auto& c : v) c = small_rational();
    if (nonzero && is_zero_vector(v)) v[static_cast<std::size_t>(pick(0, long(n) - 1))] = 1;
    return v;
  }

  /// Unit lower times unit upper triangular with small entries; always invertible.
  Matrix invertible(std::size_t n) {
    Matrix lower = Matrix::identity(n);
    Matrix upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      lower.at(i, i) = pick(0, 1) ? Rational(1) : Rational(-1);
      for (std::size_t j = 0; j < i; ++j) lower.at(i, j) = Rational(pick(-2, 2));
      for (std::size_t j = i + 1; j < n; ++j) upper.at(i, j) = Rational(pick(-2, 2));
    }
    return lower * upper;
  }

  std::mt19937& gen() { return gen_; }

 private:
  std::mt19937 gen_;
};

inline bool has_nilpotent_ad(const LieAlgebra& g, const Element& sigma) {
  Matrix a = ad(g, sigma);
  Matrix power = Matrix::identity(g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) power = power * a;
  return power.is_zero();
}

/// Elements of g whose adjoint is nilpotent: basis vectors, pairwise sums
/// and differences, filtered by the power test.
inline std::vector<Element> nilpotent_pool(const LieAlgebra& g) {
  std::vector<Element> pool;
  std::vector<Element> candidates;
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(g.basis_element(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Element sum = g.basis_element(i), diff = g.basis_element(i);
      sum[j] += 1;
      diff[j] -= 1;
      candidates.push_back(sum);
      candidates.push_back(diff);
    }
  for (auto& c : candidates)
    if (has_nilpotent_ad(g, c)) pool.push_back(std::move(c));
  return pool;
}

/// Generating set of verified automorphisms for a split algebra (the split
/// may be trivial: Zg = 0 or g0 = 0).
inline std::vector<Matrix> automorphism_atoms(const SplitData& split, Rng& rng) {
  const LieAlgebra& g = split.algebra;
  std::size_t n = g.dim();
  std::vector<Matrix> atoms;

  auto pool = nilpotent_pool(g);
  for (const auto& sigma : pool) {
    Element scaled = sigma;
    Rational c = rng.small_rational(true);
    for (auto& x : scaled) x *= c;
    atoms.push_back(exp_ad(g, scaled));
  }

  const Matrix& cob = split.change_of_basis;
  Matrix cob_inv = *cob.inverse();
  std::size_t dz = split.center_part.dim();
  std::size_t d0 = split.complement_part.dim();

  // GL on the center block, identity on g0.
  if (dz > 0) {
    Matrix adapted = Matrix::identity(n);
    Matrix a = rng.invertible(dz);
    for (std::size_t i = 0; i < dz; ++i)
      for (std::size_t j = 0; j < dz; ++j) adapted.at(i, j) = a.at(i, j);
    atoms.push_back(cob * adapted * cob_inv);
  }

  // Hom-block shear: identity plus a g0 -> Zg map vanishing on [g0, g0].
  if (dz > 0 && d0 > 0) {
    Subspace derived0 = derived_subalgebra(split.complement_algebra);
    Matrix annihilators = derived0.basis().kernel(); // functionals killing [g0,g0]
    if (annihilators.rows() > 0) {
      Matrix adapted = Matrix::identity(n);
      for (std::size_t i = 0; i < dz; ++i) {
        std::size_t r = static_cast<std::size_t>(rng.pick(0, long(annihilators.rows()) - 1));
        Rational c = rng.small_rational();
        for (std::size_t j = 0; j < d0; ++j) adapted.at(i, dz + j) = c * annihilators.at(r, j);
      }
      atoms.push_back(cob * adapted * cob_inv);
    }
  }

  // Sign-permutation candidates, kept only when the bracket relation holds.
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng.gen());
    Matrix candidate(n, n);
    for (std::size_t j = 0; j < n; ++j)
      candidate.at(perm[j], j) = rng.pick(0, 1) ? Rational(1) : Rational(-1);
    if (is_automorphism(g, candidate).ok) atoms.push_back(candidate);
  }

  // Identity is always available, so the atom set is never empty.
  atoms.push_back(Matrix::identity(n));
  return atoms;
}

/// count verified automorphisms: random products of up to four atoms.
inline std::vector<Matrix> sample_automorphisms(const SplitData& split, std::size_t count,
                                                Rng& rng) {
  auto atoms = automorphism_atoms(split, rng);
  std::vector<Matrix> samples;
  while (samples.size() < count) {
    Matrix phi = Matrix::identity(split.algebra.dim());
    long factors = rng.pick(1, 4);
    for (long f = 0; f < factors; ++f)
      phi = phi * atoms[static_cast<std::size_t>(rng.pick(0, long(atoms.size()) - 1))];
    if (is_automorphism(split.algebra, phi).ok) samples.push_back(std::move(phi));
  }
  return samples;
}

} // namespace lieob::testing

#endif
