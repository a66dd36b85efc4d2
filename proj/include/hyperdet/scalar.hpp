#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hdet {

using Integer = mpz_class;

/// Exact rational scalar. GMP keeps mpq_class values canonical (reduced,
/// positive denominator) as long as they are built through its arithmetic;
/// make_scalar/parse_scalar canonicalize anything built from raw parts.
using Scalar = mpq_class;

Scalar make_scalar(const Integer& num, const Integer& den = 1);

/// Accepts "[+-]digits" or "[+-]digits/digits" with a nonzero denominator.
/// Anything else (decimals, exponents, whitespace) raises ParseError.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

Integer pow(const Integer& base, unsigned long exponent);
Scalar pow(const Scalar& base, unsigned long exponent);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }
inline bool is_integer(const Scalar& value) { return value.get_den() == 1; }

}  // namespace hdet
