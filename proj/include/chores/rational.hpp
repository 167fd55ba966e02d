#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace chores {

// Exact rational arithmetic, GMP-backed. All values are kept in canonical
// form: lowest terms, denominator > 0, sign carried by the numerator.
// GMP maintains canonical form through arithmetic as long as every value
// entering the system is canonical, so construction always goes through
// make_rational() or parse_rational() below.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rat make_rational(const Int& num, const Int& den);

/// Parses "p/q" or a bare integer string. Strict: optional leading '-',
/// digits only, positive denominator. Throws ParseError otherwise.
Rat parse_rational(const std::string& text);

/// Canonical text form: bare integer when the denominator is 1,
/// "num/den" otherwise. parse_rational(format_rational(r)) == r.
std::string format_rational(const Rat& r);

/// Approximate double value, for human-readable output only.
double rational_to_double(const Rat& r);

}  // namespace chores
