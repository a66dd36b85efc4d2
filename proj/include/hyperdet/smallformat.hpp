#pragma once

#include "hyperdet/scalar.hpp"
#include "hyperdet/tensor.hpp"

#include <vector>

namespace hdet {

/// a x0^2 + b x0 x1 + c x1^2
struct BinaryQuadric {
  Scalar a;
  Scalar b;
  Scalar c;

  Scalar discriminant() const { return b * b - 4 * a * c; }
};

/// det(x0 A[0,.,.] + x1 A[1,.,.]) for a 2x2x2 matrix.
BinaryQuadric schlafli_pencil(const MultiMatrix& a);

/// 2x2x2 hyperdeterminant as the discriminant of the slice pencil (Schlafli).
/// Throws ShapeError for any other format.
Scalar det222(const MultiMatrix& a);

/// 2x2x2 matrices with only a_000, a_111 (resp. b_001, b_110) nonzero.
MultiMatrix counterexample_a(const Scalar& a000 = 1, const Scalar& a111 = 1);
MultiMatrix counterexample_b(const Scalar& b001 = 1, const Scalar& b110 = 1);

struct CounterexampleReport {
  Scalar det_a;
  Scalar det_b;
  bool a_nondegenerate = false;
  bool b_nondegenerate = false;
  MultiMatrix product;  ///< A * B, format 2x2x2x2
  std::vector<Vector> witness;
  bool witness_valid = false;
};

/// Non-boundary counterexample: A, B nondegenerate 2x2x2 while A * B has the
/// degeneracy witness ((1,0), (0,1), (1,1)).
CounterexampleReport counterexample_report();
CounterexampleReport counterexample_report(const MultiMatrix& a, const MultiMatrix& b);

}  // namespace hdet
