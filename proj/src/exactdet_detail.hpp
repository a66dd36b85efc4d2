#pragma once

#include "hyperdet/matrix.hpp"
#include "hyperdet/scalar.hpp"

#include <cstdint>
#include <vector>

namespace hdet::detail {

struct IntegerMatrix {
  std::size_t n = 0;
  std::vector<Integer> a;

  Integer& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Integer matrix whose determinant is det(m) * scale.
struct ClearedMatrix {
  IntegerMatrix matrix;
  Integer scale;
};

ClearedMatrix clear_denominators(const SquareMatrix& m);

Integer hadamard_squared(const IntegerMatrix& m);

std::uint32_t det_mod_p(const IntegerMatrix& m, std::uint32_t p);

/// Number of CRT primes whose product P satisfies P^2 > 4 * hadamard_sq.
std::size_t primes_needed(const Integer& hadamard_sq);

std::vector<std::uint32_t> prime_sequence(std::size_t count);

/// x = residue mod modulus, extended by one more prime (Garner step).
void crt_extend(Integer& x, Integer& modulus, std::uint32_t residue, std::uint32_t p);

/// Maps x in [0, modulus) to the symmetric range.
Integer symmetric_residue(const Integer& x, const Integer& modulus);

}  // namespace hdet::detail
