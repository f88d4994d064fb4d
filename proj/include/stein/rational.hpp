#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "stein/errors.hpp"

namespace stein {

// Exact rational scalar. mpq_class arithmetic keeps values canonical
// (lowest terms, positive denominator); raw constructors must go through rat()
// or rat_parse() so the invariant holds from the start.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// Accepts "n", "-n", "n/d"; throws invalid_parameter otherwise.
Rational rat_parse(const std::string& text);

bool is_integer(const Rational& q);
long to_long(const Rational& q); // requires is_integer and fits in long

Rational pow_rat(const Rational& base, long e);

// Exact n-th root of a non-negative rational, if it is rational.
std::optional<Rational> exact_root(const Rational& x, unsigned long n);

Integer factorial(unsigned long n);
Integer binom(unsigned long n, unsigned long k);

// k(k-1)...(k-i+1); zero when i > k >= 0.
Integer falling(long k, unsigned long i);

std::string to_string(const Rational& q);

} // namespace stein
