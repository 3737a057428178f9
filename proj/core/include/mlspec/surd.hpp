#pragma once

#include <compare>
#include <string>

#include "mlspec/numeric.hpp"

namespace mlspec {

// Exact real number (a + b*sqrt(d)) / c. Stored as r + s*sqrt(d) with r, s
// rational and d a nonnegative integer without square factors below a
// trial-division bound (d = 0 exactly when the value is rational).
//
// Arithmetic between surds needs a common field: Q(sqrt(d1)) = Q(sqrt(d2))
// iff d1*d2 is a perfect square. Mixed-field arithmetic throws DomainError;
// comparison is exact across any two fields.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const Rational& r);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(long v) : QuadraticSurd(Rational(v)) {}  // NOLINT
  QuadraticSurd(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

  // r + s*sqrt(d)
  static QuadraticSurd from_parts(const Rational& r, const Rational& s, const Integer& d);
  static QuadraticSurd sqrt(const Rational& x);

  const Rational& rational_part() const { return r_; }
  const Rational& surd_coefficient() const { return s_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  // Canonical (a, b, c, d): gcd(a, b, c) = 1, c > 0, b = 0 when rational
  // (then d = 0 too).
  Integer a() const;
  Integer b() const;
  Integer c() const;
  Integer d() const { return d_; }

  int sign() const;
  Integer floor() const;
  RationalInterval enclosure(unsigned precision_bits = 128) const;
  double to_double() const;
  std::string to_string() const;
  std::string to_decimal(int digits) const;

  QuadraticSurd conjugate() const;
  QuadraticSurd reciprocal() const;

  QuadraticSurd operator-() const;
  QuadraticSurd& operator+=(const QuadraticSurd& y);
  QuadraticSurd& operator-=(const QuadraticSurd& y);
  QuadraticSurd& operator*=(const QuadraticSurd& y);
  QuadraticSurd& operator/=(const QuadraticSurd& y);

  friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
  friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
  friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
  friend QuadraticSurd operator/(QuadraticSurd x, const QuadraticSurd& y) { return x /= y; }

  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

 private:
  struct Raw {};
  QuadraticSurd(Raw, Rational r, Rational s, Integer d);
  void normalize();
  // Rewrites y into this surd's field, or throws.
  Rational coefficient_in_field(const QuadraticSurd& y) const;

  Rational r_;
  Rational s_;
  Integer d_;
};

// Exact sign of u + v*sqrt(D), D >= 0.
int sign_of(const Rational& u, const Rational& v, const Integer& D);

// Exact sign of r + s1*sqrt(d1) + s2*sqrt(d2).
int sign_of(const Rational& r, const Rational& s1, const Integer& d1, const Rational& s2,
            const Integer& d2);

std::strong_ordering surd_compare(const QuadraticSurd& x, const QuadraticSurd& y);

// Largest positive root of A x^2 + B x + C, exact.
QuadraticSurd surd_from_quadratic(const Integer& A, const Integer& B, const Integer& C);

const QuadraticSurd& min(const QuadraticSurd& x, const QuadraticSurd& y);
const QuadraticSurd& max(const QuadraticSurd& x, const QuadraticSurd& y);

}  // namespace mlspec
