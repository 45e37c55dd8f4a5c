#ifndef LIEOB_OBSTRUCTION_HPP
#define LIEOB_OBSTRUCTION_HPP

#include <optional>
#include <string>

#include "lieob/maps.hpp"

namespace lieob {

/// Outcome of the central-split search. A split g = Zg (+) g0 with Z(g0) = 0
/// exists iff Zg meets [g,g] trivially; otherwise the (nonzero) intersection
/// is returned as the witness.
struct SplitResult {
  bool found;
  std::optional<SplitData> split;      // present iff found
  Subspace obstruction_witness;        // Zg meet [g,g]; nonzero iff not found
};

SplitResult split_check(const LieAlgebra& g);

enum class TrivialReason { Centerless, Abelian, CentralSplit };

std::string to_string(TrivialReason reason);

struct ObstructionDiagnostics {
  std::size_t dim_center;
  std::size_t dim_derived;
  std::size_t dim_center_meet_derived;
  std::size_t dim_hom_block; // dim((g/Zg) / [g/Zg, g/Zg]) * dim Zg
};

/// Trivial with one reason, or Undetermined with diagnostics. Nontriviality
/// is never claimed.
struct ObstructionVerdict {
  bool trivial;
  std::optional<TrivialReason> reason;             // present iff trivial
  std::optional<ObstructionDiagnostics> diagnostics; // present iff undetermined
};

ObstructionVerdict classify_obstruction(const LieAlgebra& g);

/// The quotient g/Zg together with its own center dimension. Couplings whose
/// structure group reduces through Aut(g) -> Aut(g/Zg) carry a trivial
/// obstruction; the note records that.
struct ReductionReport {
  LieAlgebra quotient;
  std::size_t quotient_center_dim;
  std::string note;
};

ReductionReport reduction_report(const LieAlgebra& g);

} // namespace lieob

#endif
