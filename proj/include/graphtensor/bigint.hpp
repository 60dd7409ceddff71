#pragma once

#include <gmpxx.h>

#include <string>

namespace graphtensor {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Parses an optionally signed decimal integer; throws ArgumentError otherwise.
BigInt parse_bigint(const std::string& text);

BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace graphtensor
