#pragma once

#include <gmpxx.h>

#include <string>

namespace renlab {

/// Exact rational number. All sequence values, polynomial coefficients and
/// comparisons in this library are exact; doubles appear only in the Monte
/// Carlo estimator and inside the floating LP (whose output is re-validated
/// exactly).
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Parse "num/den" or a bare integer (optional sign). Rejects decimals,
/// empty input and zero denominators with an InvalidRational error.
Rational rational_from_string(const std::string& text);

/// Canonical text form: lowest terms, "/1" suppressed ("0", "1", "-5/3").
std::string rational_to_string(const Rational& q);

/// Parse a decimal or scientific literal ("0.25", "1e-6", "-3.5e2") into the
/// exact rational it denotes.
Rational rational_from_decimal(const std::string& text);

/// Fixed-point decimal rendering with `digits` fractional digits, rounded to
/// nearest (ties away from zero). Deterministic across platforms.
std::string decimal_string(const Rational& q, int digits = 12);

/// Nearest double (GMP rounding).
double to_double(const Rational& q);

/// Exact value of the double (doubles are dyadic rationals).
Rational rational_from_double(double x);

/// q^e for e >= 0.
Rational pow_rational(const Rational& q, unsigned long e);

/// |q|.
Rational abs_rational(const Rational& q);

}  // namespace renlab
