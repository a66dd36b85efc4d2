#pragma once

#include "hyperdet/format.hpp"
#include "hyperdet/matrix.hpp"
#include "hyperdet/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hdet {

/// Dense multidimensional matrix A in V_0 (x) ... (x) V_p, entries stored
/// row-major over (i_0, ..., i_p). Immutable once built.
class MultiMatrix {
 public:
  static MultiMatrix zeros(Format format);
  /// Throws ShapeError when entries.size() != product of dims.
  static MultiMatrix from_entries(Format format, std::vector<Scalar> entries);

  const Format& format() const { return format_; }
  std::span<const Scalar> entries() const { return entries_; }

  /// Throws ShapeError for an index of the wrong length or out of range.
  const Scalar& get(std::span<const std::size_t> idx) const;
  const Scalar& get(std::initializer_list<std::size_t> idx) const {
    return get(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  std::size_t offset(std::span<const std::size_t> idx) const;

  friend bool operator==(const MultiMatrix&, const MultiMatrix&) = default;
  friend MultiMatrix operator+(const MultiMatrix& a, const MultiMatrix& b);

 private:
  MultiMatrix(Format format, std::vector<Scalar> entries)
      : format_(std::move(format)), entries_(std::move(entries)) {}

  Format format_;
  std::vector<Scalar> entries_;
};

using Vector = std::vector<Scalar>;

/// Contracts axis r of A against axis s of B. The result keeps the remaining
/// axes of A in order followed by the remaining axes of B in order; (r, s) =
/// (p, 0) is the plain product A * B.
MultiMatrix convolve(const MultiMatrix& a, const MultiMatrix& b, std::size_t r, std::size_t s);
MultiMatrix convolve(const MultiMatrix& a, const MultiMatrix& b);

/// A(v_1 (x) ... (x) v_p) in V_0.
Vector contract_with_vectors(const MultiMatrix& a, std::span<const Vector> vs);

/// True iff every v_j is nonzero and A(v_1 (x) ... (x) v_p) = 0.
bool is_degeneracy_witness(const MultiMatrix& a, std::span<const Vector> vs);

/// Acts with g on slot `axis`: result[..., i, ...] = sum_t g(i, t) A[..., t, ...].
MultiMatrix apply_axis_map(const MultiMatrix& a, std::size_t axis, const AxisMap& g);

/// result.dims[j] = A.dims[sigma[j]]; result[i_0..i_p] = A[old] with old[sigma[j]] = i_j.
MultiMatrix permute_axes(const MultiMatrix& a, std::span<const std::size_t> sigma);

MultiMatrix scale(const MultiMatrix& a, const Scalar& t);

/// The p = 1 matrix view of a two-axis multidimensional matrix.
SquareMatrix as_square_matrix(const MultiMatrix& a);
MultiMatrix from_square_matrix(const SquareMatrix& m);

}  // namespace hdet
