#pragma once

#include <gmpxx.h>

#include <string>

namespace sjet {

// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(const std::string& text);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

} // namespace sjet
