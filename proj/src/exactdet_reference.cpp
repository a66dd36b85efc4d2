// Plain single-threaded kernels. The parallel paths in exactdet.cpp must
// agree with these on every input.

#include "hyperdet/exactdet.hpp"

#include "exactdet_detail.hpp"

#include <utility>

namespace hdet::reference {

Scalar det_bareiss(const SquareMatrix& m) {
  auto [a, scale] = detail::clear_denominators(m);
  const std::size_t n = a.n;
  Integer det = 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  if (n > 0) det = a(n - 1, n - 1);
  return make_scalar(sign * det, scale);
}

Scalar det_modular_crt(const SquareMatrix& m) {
  const auto [a, scale] = detail::clear_denominators(m);
  const Integer target = 4 * detail::hadamard_squared(a);
  Integer x = 0;
  Integer modulus = 1;
  std::size_t index = 0;
  do {
    const std::uint32_t p = crt_prime(index++);
    detail::crt_extend(x, modulus, detail::det_mod_p(a, p), p);
  } while (modulus * modulus <= target);
  return make_scalar(detail::symmetric_residue(x, modulus), scale);
}

}  // namespace hdet::reference
