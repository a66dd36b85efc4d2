#include "hyperdet/symalg.hpp"

#include "hyperdet/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace hdet {

std::size_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::size_t{0});
}

std::string Monomial::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents[i]);
  }
  return out + ")";
}

std::size_t monomial_count(std::size_t dim, std::size_t deg) {
  if (dim == 0) throw std::invalid_argument("monomial_count: dim must be >= 1");
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), deg + dim - 1, dim - 1);
  if (!c.fits_ulong_p()) throw std::overflow_error("monomial_count overflows");
  return c.get_ui();
}

namespace {

void enumerate_into(std::vector<Monomial>& out, std::vector<std::size_t>& prefix,
                    std::size_t dim, std::size_t remaining) {
  if (prefix.size() + 1 == dim) {
    prefix.push_back(remaining);
    out.push_back(Monomial{prefix});
    prefix.pop_back();
    return;
  }
  for (std::size_t v = remaining + 1; v-- > 0;) {
    prefix.push_back(v);
    enumerate_into(out, prefix, dim, remaining - v);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(std::size_t dim, std::size_t deg) {
  if (dim == 0) throw std::invalid_argument("enumerate_monomials: dim must be >= 1");
  std::vector<Monomial> out;
  out.reserve(monomial_count(dim, deg));
  std::vector<std::size_t> prefix;
  prefix.reserve(dim);
  enumerate_into(out, prefix, dim, deg);
  return out;
}

std::size_t monomial_rank(const Monomial& m) {
  const std::size_t dim = m.dim();
  std::size_t rem = m.degree();
  std::size_t rank = 0;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    const std::size_t e = m.exponents[i];
    for (std::size_t v = e + 1; v <= rem; ++v) rank += monomial_count(dim - i - 1, rem - v);
    rem -= e;
  }
  return rank;
}

Monomial monomial_unrank(std::size_t rank, std::size_t dim, std::size_t deg) {
  if (rank >= monomial_count(dim, deg)) throw std::out_of_range("monomial_unrank: rank out of range");
  Monomial m{std::vector<std::size_t>(dim, 0)};
  std::size_t rem = deg;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    for (std::size_t v = rem + 1; v-- > 0;) {
      const std::size_t block = monomial_count(dim - i - 1, rem - v);
      if (rank < block) {
        m.exponents[i] = v;
        rem -= v;
        break;
      }
      rank -= block;
    }
  }
  m.exponents[dim - 1] = rem;
  return m;
}

Integer multinomial(std::size_t n, std::span<const std::size_t> parts) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  if (total != n) {
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(total) +
                                ", expected " + std::to_string(n));
  }
  Integer result = 1;
  std::size_t running = 0;
  for (std::size_t part : parts) {
    for (std::size_t t = 1; t <= part; ++t) {
      result *= static_cast<unsigned long>(++running);
      mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), t);
    }
  }
  return result;
}

std::size_t degree_N(const Format& format) {
  format.require_boundary();
  std::vector<std::size_t> parts;
  for (std::size_t j = 1; j <= format.order(); ++j) parts.push_back(format.k(j));
  parts.push_back(1);
  const Integer n = multinomial(format.k(0) + 1, parts);
  if (!n.fits_ulong_p()) throw std::overflow_error("degree_N overflows");
  return n.get_ui();
}

}  // namespace hdet
