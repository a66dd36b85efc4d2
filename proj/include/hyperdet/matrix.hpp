#pragma once

#include "hyperdet/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hdet {

/// Dense n x n matrix of exact scalars, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  SquareMatrix(std::size_t n, std::vector<Scalar> entries);

  static SquareMatrix identity(std::size_t n);
  static SquareMatrix diagonal(std::span<const Scalar> diag);

  std::size_t size() const { return n_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  std::span<const Scalar> entries() const { return entries_; }

  SquareMatrix transpose() const;
  std::size_t count_nonzero() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> entries_;
};

/// Linear map acting on one slot of a multidimensional matrix.
using AxisMap = SquareMatrix;

}  // namespace hdet
