#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace leflab {

/// Exact arbitrary-precision rational, GMP-backed. Always in lowest terms.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p" (optionally signed). Throws SyntaxError on garbage or q = 0.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

/// Size measure used for pivot selection in exact elimination:
/// |numerator| * |denominator|. Small weight = cheap pivot.
Integer pivot_weight(const Rational& r);

}  // namespace leflab
