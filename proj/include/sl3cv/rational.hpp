#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace sl3cv {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator) through arithmetic, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (optional sign, arbitrary precision).
Rational rat_parse(const std::string& text);
Integer int_parse(const std::string& text);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rational& q);

bool is_integer(const Rational& q);

// Exact square root of a non-negative perfect-square integer/rational.
// Returns false when the input is negative or not a perfect square.
bool integer_sqrt(const Integer& n, Integer& root);
bool rational_sqrt(const Rational& q, Rational& root);

// Writes m >= 1 as a*b^2 with a square-free and b maximal.
std::pair<Integer, Integer> square_free_decomposition(const Integer& m);

}  // namespace sl3cv
