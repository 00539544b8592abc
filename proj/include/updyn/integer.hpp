#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace updyn {

// All index and rational arithmetic in the library is arbitrary precision.
// Block-start offsets in the listed sequences grow like m*2^m, which leaves
// fixed-width integers around m ~ 55.
using Integer = mpz_class;
using Rational = mpq_class;

// 2^e as an Integer.
Integer pow2(unsigned long e);

// Floor square root of n >= 0.
Integer isqrt_floor(const Integer& n);

// Least r with r*r >= n, n >= 0.
Integer isqrt_ceil(const Integer& n);

// Bit k of |v| (k = 0 is the least significant bit).
int bit_of(const Integer& v, unsigned long k);

// Lossless narrowing; empty when v does not fit.
std::optional<std::int64_t> to_i64(const Integer& v);

std::string to_decimal(const Integer& v);

// Canonical "num/den" (single "num" when den == 1).
std::string to_decimal(const Rational& v);

// Accepts "a" or "a/b" in base 10; throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& s);

}  // namespace updyn
