#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mlspec {

using Integer = mpz_class;
using Rational = mpq_class;

struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
};

enum class Rounding { Down, Up, Exact };

const char* rounding_name(Rounding r);

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q", "-1.25", "3e-9".
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

// Fixed-point decimal with `digits` fractional digits rounded in direction r.
// Exact means round-to-nearest for display only.
std::string to_decimal(const Rational& x, int digits, Rounding r = Rounding::Exact);

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Rational pow(const Rational& x, long e);

namespace certified {

// Enclosures of log x (x > 0) and exp x with rational endpoints, from
// directed-rounding evaluation at the given working precision.
RationalInterval log(const Rational& x, unsigned precision_bits = 128);
RationalInterval exp(const Rational& x, unsigned precision_bits = 128);

Rational log_lower(const Rational& x, unsigned precision_bits = 128);
Rational log_upper(const Rational& x, unsigned precision_bits = 128);

// floor(e^k), exact. Values are cached process-wide; thread-safe.
Integer floor_exp(unsigned k);

// floor(log n) for n >= 1, exact.
unsigned floor_log(const Integer& n);

// floor(log x) for rational x >= 1, exact.
unsigned floor_log(const Rational& x);

}  // namespace certified

}  // namespace mlspec
