#include "hyperdet/exactdet.hpp"

#include "exactdet_detail.hpp"

#include <array>
#include <cstddef>
#include <utility>

namespace hdet {

namespace {

constexpr std::array<std::uint32_t, 64> kCrtPrimes = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u, 2147483549u, 2147483543u,
    2147483497u, 2147483489u, 2147483477u, 2147483423u, 2147483399u, 2147483353u, 2147483323u,
    2147483269u, 2147483249u, 2147483237u, 2147483179u, 2147483171u, 2147483137u, 2147483123u,
    2147483077u, 2147483069u, 2147483059u, 2147483053u, 2147483033u, 2147483029u, 2147482951u,
    2147482949u, 2147482943u, 2147482937u, 2147482921u, 2147482877u, 2147482873u, 2147482867u,
    2147482859u, 2147482819u, 2147482817u, 2147482811u, 2147482801u, 2147482763u, 2147482739u,
    2147482697u, 2147482693u, 2147482681u, 2147482663u, 2147482661u, 2147482621u, 2147482591u,
    2147482583u, 2147482577u, 2147482507u, 2147482501u, 2147482481u, 2147482417u, 2147482409u,
    2147482367u, 2147482361u, 2147482349u, 2147482343u, 2147482327u, 2147482291u, 2147482273u,
    2147482237u};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Deterministic for n < 4'759'123'141.
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t small : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Scalar finish(const Integer& det, const Integer& scale) { return make_scalar(det, scale); }

Integer bareiss_parallel(detail::IntegerMatrix a) {
  const std::size_t n = a.n;
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) mpz_swap(a(pivot, j).get_mpz_t(), a(k, j).get_mpz_t());
      sign = -sign;
    }
    if (k + 1 == n) break;

    const std::ptrdiff_t first = static_cast<std::ptrdiff_t>(k + 1);
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(n);
    mpz_srcptr piv = a(k, k).get_mpz_t();
    mpz_srcptr div = prev.get_mpz_t();
#pragma omp parallel for schedule(dynamic, 2) if (n - k > 24)
    for (std::ptrdiff_t i = first; i < last; ++i) {
      Integer t;
      const auto row = static_cast<std::size_t>(i);
      mpz_srcptr lead = a(row, k).get_mpz_t();
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_ptr cell = a(row, j).get_mpz_t();
        mpz_mul(t.get_mpz_t(), cell, piv);
        mpz_submul(t.get_mpz_t(), lead, a(k, j).get_mpz_t());
        mpz_divexact(cell, t.get_mpz_t(), div);
      }
    }
    prev = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

Integer crt_parallel(const detail::IntegerMatrix& m) {
  const std::size_t count = detail::primes_needed(detail::hadamard_squared(m));
  const std::vector<std::uint32_t> primes = detail::prime_sequence(count);
  std::vector<std::uint32_t> residues(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
    residues[static_cast<std::size_t>(i)] = detail::det_mod_p(m, primes[static_cast<std::size_t>(i)]);
  }
  Integer x = 0;
  Integer modulus = 1;
  for (std::size_t i = 0; i < count; ++i) detail::crt_extend(x, modulus, residues[i], primes[i]);
  return detail::symmetric_residue(x, modulus);
}

}  // namespace

namespace detail {

ClearedMatrix clear_denominators(const SquareMatrix& m) {
  const std::size_t n = m.size();
  ClearedMatrix out{IntegerMatrix{n, std::vector<Integer>(n * n)}, 1};
  for (std::size_t i = 0; i < n; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      Integer& cell = out.matrix(i, j);
      mpz_divexact(cell.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
      cell *= m(i, j).get_num();
    }
    out.scale *= lcm;
  }
  return out;
}

Integer hadamard_squared(const IntegerMatrix& m) {
  Integer bound = 1;
  for (std::size_t i = 0; i < m.n; ++i) {
    Integer norm = 0;
    for (std::size_t j = 0; j < m.n; ++j) mpz_addmul(norm.get_mpz_t(), m(i, j).get_mpz_t(), m(i, j).get_mpz_t());
    bound *= norm;
  }
  return bound;
}

std::uint32_t det_mod_p(const IntegerMatrix& m, std::uint32_t p) {
  const std::size_t n = m.n;
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = mpz_fdiv_ui(m.a[i].get_mpz_t(), p);
  std::uint64_t det = 1 % p;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[pivot * n + j], a[k * n + j]);
      det = (p - det) % p;
    }
    const std::uint64_t pv = a[k * n + k];
    det = det * pv % p;
    const std::uint64_t inv = pow_mod(pv, p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t f = a[i * n + k] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] + (p - f) * a[k * n + j]) % p;
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

std::size_t primes_needed(const Integer& hadamard_sq) {
  const Integer target = 4 * hadamard_sq;
  Integer product = 1;
  std::size_t count = 0;
  while (product * product <= target) product *= crt_prime(count++);
  return count == 0 ? 1 : count;
}

std::vector<std::uint32_t> prime_sequence(std::size_t count) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count && i < kCrtPrimes.size(); ++i) out.push_back(kCrtPrimes[i]);
  std::uint32_t candidate = kCrtPrimes.back();
  while (out.size() < count) {
    do candidate -= 2;
    while (!is_prime_u32(candidate));
    out.push_back(candidate);
  }
  return out;
}

void crt_extend(Integer& x, Integer& modulus, std::uint32_t residue, std::uint32_t p) {
  const std::uint64_t x_mod = mpz_fdiv_ui(x.get_mpz_t(), p);
  const std::uint64_t m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), p);
  const std::uint64_t diff = (residue + p - x_mod) % p;
  const std::uint64_t t = diff * pow_mod(m_mod, p - 2, p) % p;
  mpz_addmul_ui(x.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
  modulus *= static_cast<unsigned long>(p);
}

Integer symmetric_residue(const Integer& x, const Integer& modulus) {
  if (2 * x > modulus) return x - modulus;
  return x;
}

}  // namespace detail

std::span<const std::uint32_t> crt_primes() { return kCrtPrimes; }

std::uint32_t crt_prime(std::size_t index) {
  if (index < kCrtPrimes.size()) return kCrtPrimes[index];
  return detail::prime_sequence(index + 1).back();
}

Integer hadamard_bound_squared(const SquareMatrix& integer_matrix) {
  return detail::hadamard_squared(detail::clear_denominators(integer_matrix).matrix);
}

std::uint32_t det_mod_p(const SquareMatrix& integer_matrix, std::uint32_t p) {
  return detail::det_mod_p(detail::clear_denominators(integer_matrix).matrix, p);
}

Scalar det_bareiss(const SquareMatrix& m) {
  auto cleared = detail::clear_denominators(m);
  return finish(bareiss_parallel(std::move(cleared.matrix)), cleared.scale);
}

Scalar det_modular_crt(const SquareMatrix& m) {
  const auto cleared = detail::clear_denominators(m);
  return finish(crt_parallel(cleared.matrix), cleared.scale);
}

Scalar determinant(const SquareMatrix& m, DetKernel kernel) {
  return kernel == DetKernel::modular_crt ? det_modular_crt(m) : det_bareiss(m);
}

}  // namespace hdet
