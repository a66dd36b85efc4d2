#include "hyperdet/matrix.hpp"

#include "hyperdet/errors.hpp"

#include <string>

namespace hdet {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<Scalar> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw ShapeError("square matrix of size " + std::to_string(n) + " needs " +
                     std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
  }
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::diagonal(std::span<const Scalar> diag) {
  SquareMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t SquareMatrix::count_nonzero() const {
  std::size_t count = 0;
  for (const auto& x : entries_) count += sgn(x) != 0;
  return count;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) {
    throw ShapeError("matrix product of sizes " + std::to_string(a.n_) + " and " +
                     std::to_string(b.n_));
  }
  SquareMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t t = 0; t < a.n_; ++t) {
      if (sgn(a(i, t)) == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, t) * b(t, j);
    }
  return c;
}

}  // namespace hdet
