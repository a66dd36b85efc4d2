#pragma once

#include "hyperdet/exactdet.hpp"
#include "hyperdet/format.hpp"
#include "hyperdet/matrix.hpp"
#include "hyperdet/partial.hpp"
#include "hyperdet/scalar.hpp"
#include "hyperdet/tensor.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hdet {

/// Det(A) := det of the partial map. Throws FormatError for non-boundary formats.
Scalar hyperdet(const MultiMatrix& a, DetKernel kernel = DetKernel::bareiss);

/// Boundary format only: A is nondegenerate iff Det(A) != 0.
bool is_nondegenerate(const MultiMatrix& a);

/// Exponents of Det(A * B) = Det(A)^exp_a Det(B)^exp_b:
///   exp_a = (l_0; l_1, ..., l_q),  exp_b = (k_0 + 1; k_1, ..., k_{p-1}, k_p + 1).
struct BinetExponents {
  Integer exp_a;
  Integer exp_b;
};

/// Both formats boundary and dims_A[p] == dims_B[0]; ShapeError/FormatError otherwise.
BinetExponents binet_exponents(const Format& format_a, const Format& format_b);

struct BinetReport {
  BinetExponents exponents;
  Scalar det_a;
  Scalar det_b;
  Scalar lhs;  ///< Det(A * B)
  Scalar rhs;  ///< Det(A)^exp_a Det(B)^exp_b
  bool equal = false;
};

/// Convolves along (p, 0) and compares both sides exactly.
BinetReport verify_binet(const MultiMatrix& a, const MultiMatrix& b,
                         DetKernel kernel = DetKernel::bareiss);

/// det(g)^{N / (k_axis + 1)}: Det(g acting on slot `axis` of A) = factor * Det(A).
Scalar equivariance_factor(const Format& format, std::size_t axis, const AxisMap& g);

/// Det computed with the inner slots put in a given order.
struct OrderingResult {
  std::vector<std::size_t> ordering;  ///< inner axes of A, in slot order 1..p
  std::vector<std::size_t> m_sequence;
  /// (dim V_j, degree m_j + 1) for each target slot.
  std::vector<std::pair<std::size_t, std::size_t>> row_profile;
  std::size_t size = 0;
  Scalar det;
};

/// Axis permutation (0, ordering...) applied before building the partial map.
/// `ordering` must be a permutation of {1, ..., p}.
MultiMatrix reorder_inner_axes(const MultiMatrix& a, std::span<const std::size_t> ordering);

/// One entry per permutation of the inner axes, in lexicographic order.
std::vector<OrderingResult> hyperdet_all_orderings(const MultiMatrix& a,
                                                   DetKernel kernel = DetKernel::bareiss);

/// True iff every inner-axis ordering gives the same determinant.
bool hyperdet_invariant_under_ordering(const MultiMatrix& a);

}  // namespace hdet
