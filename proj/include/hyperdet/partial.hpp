#pragma once

#include "hyperdet/format.hpp"
#include "hyperdet/matrix.hpp"
#include "hyperdet/symalg.hpp"
#include "hyperdet/tensor.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hdet {

/// Basis element e_{i0}^v (x) x^{alpha_1} (x) ... (x) x^{alpha_p} of the source space.
struct SourceLabel {
  std::size_t i0 = 0;
  std::vector<Monomial> alphas;
  std::string to_string() const;
};

/// Basis element x^{beta_1} (x) ... (x) x^{beta_p} of the target space.
struct TargetLabel {
  std::vector<Monomial> betas;
  std::string to_string() const;
};

/// Matrix of the natural morphism
///   V_0^v (x) S^{m_1} V_1 (x) ... (x) S^{m_p} V_p  ->  S^{m_1+1} V_1 (x) ... (x) S^{m_p+1} V_p
/// in monomial bases. Column (i0, alpha) maps to sum_i a_{i0,i} x_{i_1} x^{alpha_1} (x) ...,
/// so every entry is zero or a single entry of A.
struct PartialMap {
  SquareMatrix matrix;
  std::vector<TargetLabel> row_basis;
  std::vector<SourceLabel> col_basis;
  Format source_format;
  std::vector<std::size_t> m_sequence;
};

/// Requires boundary format; throws FormatError otherwise.
PartialMap build_partial(const MultiMatrix& a);

/// Square map for dims (q(k_0+1), q(k_1+1), k_2+1, ..., k_p+1) with k_0 = sum k_i,
/// ks = (k_0, ..., k_p) and every k_i >= 1 for i >= 1. The m_j come from ks.
PartialMap build_generalized_partial(const MultiMatrix& a, std::size_t q,
                                     std::span<const std::size_t> ks);

/// Header, row labels, column labels, then one "row | col | value" line per nonzero.
std::string dump_partial(const PartialMap& map);

}  // namespace hdet
