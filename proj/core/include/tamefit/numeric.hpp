#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamefit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Input-class failure: malformed files, invalid discriminants, inconsistent
/// manual records. Maps to exit code 2 at the CLI.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A Birch-Tate-predicted group order failed an exactness gate (integrality
/// or divisibility). This is a mathematical alarm, not an input error; it
/// cannot fire for invariants derived from a fundamental discriminant.
class BirchTateViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

bool is_integer(const Rational& x);

/// Largest odd divisor of |n|; n must be nonzero.
Integer odd_part(const Integer& n);

/// 2-adic valuation of n != 0.
long v2(const Integer& n);

long valuation(const Integer& n, const Integer& p);
long valuation(const Rational& x, const Integer& p);

/// gcd of numerators over lcm of denominators: the nonnegative generator of
/// the fractional Z-ideal spanned by x and y.
Rational rational_gcd(const Rational& x, const Rational& y);

/// Parses "n" or "n/d"; throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// x == r1 mod m1, x == r2 mod m2 for coprime positive moduli; result in
/// [0, m1*m2).
Integer crt_combine(const Integer& r1, const Integer& m1, const Integer& r2,
                    const Integer& m2);

bool is_prime(const Integer& n);
bool is_squarefree(const Integer& n);

/// Sum of the positive divisors of n >= 1.
Integer sigma1(const Integer& n);

/// 2^e for e >= 0.
Integer pow2(long e);

}  // namespace tamefit
