#pragma once

#include "hyperdet/matrix.hpp"
#include "hyperdet/scalar.hpp"

#include <cstdint>
#include <span>

namespace hdet {

enum class DetKernel { bareiss, modular_crt };

// Both kernels clear denominators row by row (each row times the lcm of its
// denominators), work over the integers and divide the scaling back out.
// Rows are updated in parallel with OpenMP; results do not depend on the
// thread count.

/// Fraction-free Gaussian elimination. Pivot: first nonzero entry at or below
/// the diagonal; a column without one gives 0.
Scalar det_bareiss(const SquareMatrix& m);

/// Determinants modulo word-size primes combined by Chinese remaindering until
/// the prime product exceeds twice the Hadamard bound.
Scalar det_modular_crt(const SquareMatrix& m);

Scalar determinant(const SquareMatrix& m, DetKernel kernel = DetKernel::bareiss);

/// Squared Hadamard bound: product over rows of the squared Euclidean row norm.
Integer hadamard_bound_squared(const SquareMatrix& integer_matrix);

/// Fixed list of primes in (2^30, 2^31) used by det_modular_crt, largest first.
std::span<const std::uint32_t> crt_primes();

/// Prime number `index` of the CRT sequence; extends crt_primes() downward
/// deterministically once the fixed list is exhausted.
std::uint32_t crt_prime(std::size_t index);

std::uint32_t det_mod_p(const SquareMatrix& integer_matrix, std::uint32_t p);

/// Single-threaded versions of the kernels, kept as the reference the
/// parallel paths are tested and benchmarked against.
namespace reference {
Scalar det_bareiss(const SquareMatrix& m);
Scalar det_modular_crt(const SquareMatrix& m);
}  // namespace reference

}  // namespace hdet
