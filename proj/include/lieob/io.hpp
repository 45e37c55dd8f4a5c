#ifndef LIEOB_IO_HPP
#define LIEOB_IO_HPP

#include <stdexcept>
#include <string>

#include "lieob/lie_algebra.hpp"

namespace lieob {

/// Malformed document text (syntax, missing fields, bad rational strings,
/// out-of-range indices, i >= j entries).
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid document whose constants violate the Jacobi identity.
struct JacobiDocumentError : std::runtime_error {
  JacobiDocumentError(std::string msg, std::size_t i_, std::size_t j_, std::size_t k_)
      : std::runtime_error(std::move(msg)), i(i_), j(j_), k(k_) {}
  std::size_t i, j, k;
};

struct NamedAlgebra {
  std::string name;
  LieAlgebra algebra;
};

/// Parses a UTF-8 algebra document: a JSON object with fields name, dim,
/// basis_names, structure_constants (records {i, j, coeffs}), rationals as
/// "p/q" strings. Runs the Jacobi check and rejects violators unless
/// enforce_jacobi is cleared (the `check` command reports violations as data).
NamedAlgebra parse_algebra(const std::string& text, bool enforce_jacobi = true);

/// Canonical document emission; parse followed by emit is the identity on
/// canonical documents. indent = -1 yields a single-line document.
std::string emit_algebra(const std::string& name, const LieAlgebra& g, int indent = 2);

} // namespace lieob

#endif
