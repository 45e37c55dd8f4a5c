#include "lieob/lie_algebra.hpp"

namespace lieob {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names,
                       BracketTable brackets)
    : dim_(dim), basis_names_(std::move(basis_names)), brackets_(std::move(brackets)) {
  if (dim_ > kMaxDim)
    throw std::invalid_argument("dimension " + std::to_string(dim_) + " exceeds the cap of " +
                                std::to_string(kMaxDim));
  if (basis_names_.empty()) {
    basis_names_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) basis_names_.push_back("e" + std::to_string(i + 1));
  }
  if (basis_names_.size() != dim_)
    throw std::invalid_argument("expected " + std::to_string(dim_) + " basis names, got " +
                                std::to_string(basis_names_.size()));
  for (auto it = brackets_.begin(); it != brackets_.end();) {
    const auto& [ij, value] = *it;
    if (ij.first >= ij.second || ij.second >= dim_)
      throw std::invalid_argument("structure constant index pair (" +
                                  std::to_string(ij.first) + "," + std::to_string(ij.second) +
                                  ") must satisfy i < j < dim");
    if (value.size() != dim_)
      throw std::invalid_argument("structure constant vector length mismatch at (" +
                                  std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
    it = is_zero_vector(value) ? brackets_.erase(it) : std::next(it);
  }
}

Element LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::invalid_argument("basis index out of range");
  if (i == j) return zero_vector(dim_);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return zero_vector(dim_);
  Element v = it->second;
  if (flip)
    for (auto& c : v) c = -c;
  return v;
}

Element LieAlgebra::basis_element(std::size_t i) const {
  Element v = zero_vector(dim_);
  v.at(i) = 1;
  return v;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket operand length (" + std::to_string(x.size()) + ", " +
                                std::to_string(y.size()) + ") does not match dim " +
                                std::to_string(dim_));
  Element result = zero_vector(dim_);
  for (const auto& [ij, c] : brackets_) {
    auto [i, j] = ij;
    Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (c[k] != 0) result[k] += coeff * c[k];
  }
  return result;
}

JacobiReport verify_jacobi(const LieAlgebra& g) {
  JacobiReport report;
  std::size_t n = g.dim();
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Element sum = g.bracket(g.basis_bracket(i, j), g.basis_element(k));
        Element t2 = g.bracket(g.basis_bracket(j, k), g.basis_element(i));
        Element t3 = g.bracket(g.basis_bracket(k, i), g.basis_element(j));
        for (std::size_t l = 0; l < n; ++l) sum[l] += t2[l] + t3[l];
        if (!is_zero_vector(sum)) report.violations.push_back({i, j, k, std::move(sum)});
      }
  return report;
}

Subspace center(const LieAlgebra& g) {
  std::size_t n = g.dim();
  // Stack the maps v -> [v, e_j]; the center is the common kernel.
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Element b = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) stacked.at(j * n + k, i) = b[k];
    }
  return Subspace::span(stacked.kernel());
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<Element> spanning;
  for (const auto& [ij, c] : g.brackets()) spanning.push_back(c);
  return Subspace::span(spanning, g.dim());
}

Matrix ad(const LieAlgebra& g, const Element& x) {
  if (x.size() != g.dim())
    throw std::invalid_argument("ad operand length does not match algebra dimension");
  Matrix m(g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) m.set_column(j, g.bracket(x, g.basis_element(j)));
  return m;
}

std::pair<LieAlgebra, Matrix> quotient_algebra(const LieAlgebra& g, const Subspace& ideal) {
  std::size_t n = g.dim();
  if (ideal.ambient_dim() != n) throw std::invalid_argument("ideal ambient dimension mismatch");
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    Element v = ideal.basis().row(r);
    for (std::size_t i = 0; i < n; ++i)
      if (!ideal.contains(g.bracket(v, g.basis_element(i))))
        throw NotAnIdealError("subspace is not an ideal: [v, e" + std::to_string(i) +
                                  "] escapes the subspace",
                              v, i);
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ideal.pivot_columns()) is_pivot[p] = true;
  std::vector<std::size_t> kept; // quotient coordinates, in increasing order
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) kept.push_back(i);
  std::size_t m = kept.size();

  // pi(v): reduce v modulo the ideal basis, then read off the kept coordinates.
  auto project = [&](Element v) {
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      Rational c = v[ideal.pivot_columns()[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] -= c * ideal.basis().at(r, j);
    }
    Element out(m);
    for (std::size_t a = 0; a < m; ++a) out[a] = v[kept[a]];
    return out;
  };

  Matrix projection(m, n);
  for (std::size_t i = 0; i < n; ++i) projection.set_column(i, project(g.basis_element(i)));

  LieAlgebra::BracketTable table;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      table[{a, b}] = project(g.basis_bracket(kept[a], kept[b]));

  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) names.push_back(g.basis_names()[kept[a]] + "~");
  return {LieAlgebra(m, std::move(names), std::move(table)), projection};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::size_t n = a.dim() + b.dim();
  LieAlgebra::BracketTable table;
  auto embed_a = [&](const Element& v) {
    Element w = zero_vector(n);
    for (std::size_t k = 0; k < a.dim(); ++k) w[k] = v[k];
    return w;
  };
  auto embed_b = [&](const Element& v) {
    Element w = zero_vector(n);
    for (std::size_t k = 0; k < b.dim(); ++k) w[a.dim() + k] = v[k];
    return w;
  };
  for (const auto& [ij, c] : a.brackets()) table[ij] = embed_a(c);
  for (const auto& [ij, c] : b.brackets())
    table[{a.dim() + ij.first, a.dim() + ij.second}] = embed_b(c);
  std::vector<std::string> names = a.basis_names();
  for (const auto& name : b.basis_names()) names.push_back(name + "'");
  return LieAlgebra(n, std::move(names), std::move(table));
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
  std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("basis change must be n x n");
  auto p_inv = p.inverse();
  if (!p_inv) throw std::invalid_argument("basis change matrix is singular");
  LieAlgebra::BracketTable table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      table[{i, j}] = *p_inv * g.bracket(p.column(i), p.column(j));
  return LieAlgebra(n, {}, std::move(table));
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s, const std::string& name_prefix) {
  std::size_t m = s.dim();
  LieAlgebra::BracketTable table;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Element b = g.bracket(s.basis().row(i), s.basis().row(j));
      auto coords = s.coordinates(b);
      if (!coords)
        throw std::invalid_argument("subspace is not closed under the bracket at pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      table[{i, j}] = *coords;
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back(name_prefix + std::to_string(i + 1));
  return LieAlgebra(m, std::move(names), std::move(table));
}

} // namespace lieob
