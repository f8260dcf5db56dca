#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace keller {

using Integer = mpz_class;

/// Exact rational. GMP keeps results canonical (lowest terms, positive
/// denominator, zero as 0/1) as long as every constructed value goes
/// through make_rational or arithmetic.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "a" or "a/b" with optional leading sign. Throws InputError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Exact k-th root over Q, if one exists. For even k only the positive root
/// is returned.
std::optional<Rational> rational_root(const Rational& q, unsigned k);

}  // namespace keller
