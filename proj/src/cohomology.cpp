#include "lieob/cohomology.hpp"

#include <map>

namespace lieob {

namespace {

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (k == 0) break;
    // advance to the next k-subset in lex order
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

} // namespace

LieModule::LieModule(LieAlgebra algebra, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
  if (action_.size() != algebra_.dim())
    throw std::invalid_argument("expected one action matrix per basis element");
  module_dim_ = algebra_.dim() == 0 ? 0 : action_[0].rows();
  for (const auto& a : action_)
    if (a.rows() != module_dim_ || a.cols() != module_dim_)
      throw std::invalid_argument("action matrices must be square of equal size");
  for (std::size_t i = 0; i < algebra_.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra_.dim(); ++j) {
      Matrix lhs = action_of(algebra_.basis_bracket(i, j));
      Matrix rhs = action_[i] * action_[j] - action_[j] * action_[i];
      if (!(lhs == rhs))
        throw std::invalid_argument("action is not a representation at basis pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

Matrix LieModule::action_of(const Element& x) const {
  if (x.size() != algebra_.dim()) throw std::invalid_argument("element length mismatch");
  Matrix sum(module_dim_, module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) sum = sum + action_[i] * x[i];
  return sum;
}

LieModule trivial_module(const LieAlgebra& g, std::size_t module_dim) {
  std::vector<Matrix> action(g.dim(), Matrix(module_dim, module_dim));
  return LieModule(g, std::move(action));
}

LieModule adjoint_module(const LieAlgebra& g) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(ad(g, g.basis_element(i)));
  return LieModule(g, std::move(action));
}

std::size_t cochain_dim(const LieModule& m, std::size_t k) {
  std::size_t n = m.algebra().dim();
  if (k > n) return 0;
  // C(n, k) stays well within size_t at the dimension cap.
  std::size_t binom = 1;
  for (std::size_t i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  return binom * m.module_dim();
}

Matrix ce_differential(const LieModule& m, std::size_t k) {
  std::size_t n = m.algebra().dim();
  if (k > n)
    throw std::invalid_argument("cochain degree " + std::to_string(k) + " exceeds dim " +
                                std::to_string(n));
  std::size_t md = m.module_dim();
  auto domain = subsets_lex(n, k);
  auto codomain = subsets_lex(n, k + 1);
  std::map<std::vector<std::size_t>, std::size_t> domain_rank;
  for (std::size_t s = 0; s < domain.size(); ++s) domain_rank[domain[s]] = s;

  Matrix d(codomain.size() * md, domain.size() * md);
  for (std::size_t t_idx = 0; t_idx < codomain.size(); ++t_idx) {
    const auto& T = codomain[t_idx];
    // Action terms: (-1)^i rho(e_{T[i]}) applied to omega(T \ {T[i]}).
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t p = 0; p <= k; ++p)
        if (p != i) rest.push_back(T[p]);
      int sign = (i % 2 == 0) ? 1 : -1;
      std::size_t col_block = domain_rank.at(rest) * md;
      const Matrix& rho = m.action(T[i]);
      for (std::size_t r = 0; r < md; ++r)
        for (std::size_t c = 0; c < md; ++c)
          d.at(t_idx * md + r, col_block + c) += Rational(sign) * rho.at(r, c);
    }
    // Contraction terms: (-1)^{i+j} omega([e_{T[i]}, e_{T[j]}] ^ rest).
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t p = 0; p <= k; ++p)
          if (p != i && p != j) rest.push_back(T[p]);
        Element b = m.algebra().basis_bracket(T[i], T[j]);
        int pair_sign = ((i + j) % 2 == 0) ? 1 : -1;
        for (std::size_t l = 0; l < n; ++l) {
          if (b[l] == 0) continue;
          // Insert e_l into rest; repeated index kills the term.
          std::size_t pos = 0;
          bool repeated = false;
          for (std::size_t x : rest) {
            if (x == l) repeated = true;
            if (x < l) ++pos;
          }
          if (repeated) continue;
          std::vector<std::size_t> subset = rest;
          subset.insert(subset.begin() + static_cast<std::ptrdiff_t>(pos), l);
          int insert_sign = (pos % 2 == 0) ? 1 : -1;
          Rational coeff = Rational(pair_sign * insert_sign) * b[l];
          std::size_t col_block = domain_rank.at(subset) * md;
          for (std::size_t r = 0; r < md; ++r)
            d.at(t_idx * md + r, col_block + r) += coeff;
        }
      }
  }
  return d;
}

std::size_t cohomology_dim(const LieModule& m, std::size_t k) {
  std::size_t n = m.algebra().dim();
  if (k > n)
    throw std::invalid_argument("cohomology degree " + std::to_string(k) + " exceeds dim " +
                                std::to_string(n));
  std::size_t dim_k = cochain_dim(m, k);
  std::size_t rank_out = (k == n) ? 0 : ce_differential(m, k).rank();
  std::size_t rank_in = (k == 0) ? 0 : ce_differential(m, k - 1).rank();
  return dim_k - rank_out - rank_in;
}

bool is_closed(const LieModule& m, std::size_t k, const Element& cochain) {
  if (cochain.size() != cochain_dim(m, k))
    throw std::invalid_argument("cochain length does not match C(n,k) * module_dim");
  if (k == m.algebra().dim()) return true;
  return is_zero_vector(ce_differential(m, k) * cochain);
}

} // namespace lieob
