#include "lieob/obstruction.hpp"

namespace lieob {

SplitResult split_check(const LieAlgebra& g) {
  std::size_t n = g.dim();
  Subspace zg = center(g);
  Subspace derived = derived_subalgebra(g);
  Subspace witness = zg.intersect(derived);
  if (witness.dim() != 0) return SplitResult{false, std::nullopt, witness};

  // Extend a basis of [g,g] to a complement of Zg, greedily by standard
  // basis vectors; rank against Zg keeps the sum direct.
  std::vector<Element> complement_rows;
  for (std::size_t r = 0; r < derived.dim(); ++r) complement_rows.push_back(derived.basis().row(r));
  std::size_t target = n - zg.dim();
  for (std::size_t i = 0; i < n && complement_rows.size() < target; ++i) {
    std::vector<Element> candidate = complement_rows;
    candidate.push_back(g.basis_element(i));
    Matrix with_center = vstack(zg.basis(), Matrix::from_rows(candidate, n));
    if (with_center.rank() == zg.dim() + candidate.size()) complement_rows = std::move(candidate);
  }
  Subspace complement = Subspace::span(complement_rows, n);
  SplitData split = make_split_data(g, zg, complement);
  return SplitResult{true, std::move(split), Subspace::zero(n)};
}

std::string to_string(TrivialReason reason) {
  switch (reason) {
    case TrivialReason::Centerless: return "Centerless";
    case TrivialReason::Abelian: return "Abelian";
    case TrivialReason::CentralSplit: return "CentralSplit";
  }
  return "?";
}

ObstructionVerdict classify_obstruction(const LieAlgebra& g) {
  Subspace zg = center(g);
  Subspace derived = derived_subalgebra(g);
  if (zg.dim() == 0) return {true, TrivialReason::Centerless, std::nullopt};
  if (derived.dim() == 0) return {true, TrivialReason::Abelian, std::nullopt};
  SplitResult split = split_check(g);
  if (split.found) return {true, TrivialReason::CentralSplit, std::nullopt};
  auto [quotient, projection] = quotient_algebra(g, zg);
  std::size_t quotient_abelianized = quotient.dim() - derived_subalgebra(quotient).dim();
  ObstructionDiagnostics diag{zg.dim(), derived.dim(), split.obstruction_witness.dim(),
                              quotient_abelianized * zg.dim()};
  return {false, std::nullopt, diag};
}

ReductionReport reduction_report(const LieAlgebra& g) {
  Subspace zg = center(g);
  auto [quotient, projection] = quotient_algebra(g, zg);
  std::size_t qz = center(quotient).dim();
  std::string note =
      "couplings with structure group reduced through Aut(g) -> Aut(g/Zg) have trivial "
      "obstruction; the quotient is " +
      std::string(qz == 0 ? "centerless" : "not centerless (center dim " + std::to_string(qz) + ")");
  return ReductionReport{std::move(quotient), qz, std::move(note)};
}

} // namespace lieob
