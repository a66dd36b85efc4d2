#pragma once

#include "hyperdet/format.hpp"
#include "hyperdet/scalar.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hdet {

/// Exponent vector of a basis monomial of S^deg V, dim V = exponents.size().
struct Monomial {
  std::vector<std::size_t> exponents;

  std::size_t degree() const;
  std::size_t dim() const { return exponents.size(); }
  /// "(1,0,2)"
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// dim S^deg V with dim V = dim, i.e. binomial(deg + dim - 1, dim - 1).
std::size_t monomial_count(std::size_t dim, std::size_t deg);

/// All monomials of the given degree in lexicographically descending order.
std::vector<Monomial> enumerate_monomials(std::size_t dim, std::size_t deg);

/// Position of m in enumerate_monomials(m.dim(), m.degree()).
std::size_t monomial_rank(const Monomial& m);
Monomial monomial_unrank(std::size_t rank, std::size_t dim, std::size_t deg);

/// n! / (parts[0]! ... parts[r]!); throws std::invalid_argument if the parts do not sum to n.
Integer multinomial(std::size_t n, std::span<const std::size_t> parts);

/// (k_0+1)! / (k_1! ... k_p!), the size of the partial map. Throws FormatError
/// for non-boundary formats.
std::size_t degree_N(const Format& format);

}  // namespace hdet
