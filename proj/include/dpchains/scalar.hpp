#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace dpchains {

// Exact rational value. Coordinates, dot products and chain targets are all
// Scalars, so "same dot product" and "same line" are decidable equalities
// instead of tolerance checks. GMP keeps every arithmetic result canonical
// (lowest terms, positive denominator); parse_scalar canonicalizes input.
using Scalar = mpq_class;

// Counts of tuples reach n^(k+1) in with-repeats mode, so the counting path
// never uses fixed-width integers.
using BigInt = mpz_class;

// Accepts "p" or "p/q" with an optional leading sign on p and q > 0 digits.
// Anything else (decimals in particular) is a ParseError.
Scalar parse_scalar(std::string_view text);

// Canonical wire form: "p" for integers, "p/q" otherwise.
std::string scalar_to_string(const Scalar& s);
std::string bigint_to_string(const BigInt& n);

double to_double(const Scalar& s);
double to_double(const BigInt& n);

// Natural log of a positive big integer, usable far beyond double range.
double log_bigint(const BigInt& n);

std::size_t hash_value(const BigInt& n);
std::size_t hash_value(const Scalar& s);

struct ScalarHash {
    std::size_t operator()(const Scalar& s) const { return hash_value(s); }
};

}  // namespace dpchains
