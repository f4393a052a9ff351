#pragma once

// Exact arbitrary-precision arithmetic (GMP-backed). Every count in this
// library is a BigNat and every series coefficient a BigRat; no value is
// ever rounded or truncated.

#include <gmpxx.h>

#include <string>

#include "altcount/errors.hpp"

namespace altcount {

using BigNat = mpz_class; // nonnegative throughout this code base
using BigRat = mpq_class; // canonical: lowest terms, denominator > 0

// num / den with the divisibility checked; throws integrity_error when the
// remainder is nonzero. `context` names the caller in the error message.
BigNat exact_div(const BigNat& num, const BigNat& den, const char* context);

BigNat pow_nat(const BigNat& base, unsigned long exp);

// BigRat whose denominator is 1, as a BigNat; integrity_error otherwise.
BigNat rat_to_nat(const BigRat& r, const char* context);

// Decimal string; rationals render as "num/den" when the denominator is not 1.
std::string to_string(const BigNat& v);
std::string to_string(const BigRat& v);

} // namespace altcount
