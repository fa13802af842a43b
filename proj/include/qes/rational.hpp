#pragma once

#include <gmpxx.h>

#include <string>

namespace qes {

// Exact arithmetic everywhere the math demands identities rather than
// approximations: frequencies, quantum numbers, matrix entries.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or "p" in base 10. Decimal points and exponents are rejected
// with a hint to use rational syntax.
Rat parse_rational(const std::string& text);

std::string to_string(const Int& value);
// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rat& value);

Rat make_rat(long num, long den);

Int factorial(unsigned long n);

// value * (value-1) * ... * (value-count+1); 1 when count == 0.
Int falling_factorial(long value, long count);

Int int_pow(long base, unsigned long exponent);

}  // namespace qes
