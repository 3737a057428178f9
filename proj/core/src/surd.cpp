#include "mlspec/surd.hpp"

#include <mpfr.h>

#include "mlspec/errors.hpp"

namespace mlspec {

namespace {

constexpr unsigned long kTrialDivisionBound = 2000;

int sgn(const Rational& x) { return ::sgn(x); }

Rational sqrt_bound(const Integer& d, unsigned bits, mpfr_rnd_t rnd) {
  mpfr_t v;
  mpfr_init2(v, bits);
  mpfr_set_z(v, d.get_mpz_t(), rnd);
  mpfr_sqrt(v, v, rnd);
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v);
  mpfr_clear(v);
  return q;
}

}  // namespace

int sign_of(const Rational& u, const Rational& v, const Integer& D) {
  int su = sgn(u);
  int sv = (D == 0) ? 0 : sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  Rational lhs = u * u;
  Rational rhs = v * v * D;
  if (lhs > rhs) return su;
  if (lhs < rhs) return sv;
  return 0;
}

int sign_of(const Rational& r, const Rational& s1, const Integer& d1, const Rational& s2,
            const Integer& d2) {
  // sign of P = s1 sqrt(d1) + s2 sqrt(d2)
  int a = (d1 == 0) ? 0 : sgn(s1);
  int b = (d2 == 0) ? 0 : sgn(s2);
  int sp;
  if (a == 0) {
    sp = b;
  } else if (b == 0 || a == b) {
    sp = a;
  } else {
    Rational x = s1 * s1 * d1;
    Rational y = s2 * s2 * d2;
    sp = x > y ? a : (x < y ? b : 0);
  }
  int sr = sgn(r);
  if (sp == 0) return sr;
  if (sr == 0 || sr == sp) return sp;
  // opposite signs: compare r^2 with P^2 = s1^2 d1 + s2^2 d2 + 2 s1 s2 sqrt(d1 d2)
  Rational u = r * r - s1 * s1 * d1 - s2 * s2 * d2;
  Rational v = -2 * s1 * s2;
  int c = sign_of(u, v, Integer(d1 * d2));
  if (c > 0) return sr;
  if (c < 0) return sp;
  return 0;
}

QuadraticSurd::QuadraticSurd(const Rational& r) : r_(r), s_(0), d_(0) {}

QuadraticSurd::QuadraticSurd(const Integer& a, const Integer& b, const Integer& c,
                             const Integer& d) {
  if (c == 0) throw DomainError("surd with zero denominator");
  if (d < 0) throw DomainError("surd with negative radicand");
  r_ = make_rational(a, c);
  s_ = make_rational(b, c);
  d_ = d;
  normalize();
}

QuadraticSurd::QuadraticSurd(Raw, Rational r, Rational s, Integer d)
    : r_(std::move(r)), s_(std::move(s)), d_(std::move(d)) {
  if (s_ == 0 || d_ == 0) {
    s_ = 0;
    d_ = 0;
  }
}

QuadraticSurd QuadraticSurd::from_parts(const Rational& r, const Rational& s, const Integer& d) {
  if (d < 0) throw DomainError("surd with negative radicand");
  QuadraticSurd x(Raw{}, r, s, d);
  x.normalize();
  return x;
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& x) {
  if (x < 0) throw DomainError("square root of a negative number");
  // sqrt(p/q) = sqrt(p q) / q
  return from_parts(0, Rational(1, 1) / x.get_den(), Integer(x.get_num() * x.get_den()));
}

void QuadraticSurd::normalize() {
  if (s_ == 0 || d_ == 0) {
    s_ = 0;
    d_ = 0;
    return;
  }
  Integer sq;
  for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
    unsigned long pp = p * p;
    if (pp > d_) break;
    while (mpz_divisible_ui_p(d_.get_mpz_t(), pp)) {
      d_ /= pp;
      s_ *= p;
    }
  }
  if (is_perfect_square(d_)) {
    s_ *= isqrt(d_);
    d_ = 1;
  }
  if (d_ == 1) {
    r_ += s_;
    s_ = 0;
    d_ = 0;
  }
}

Rational QuadraticSurd::coefficient_in_field(const QuadraticSurd& y) const {
  if (y.d_ == 0) return 0;
  if (y.d_ == d_) return y.s_;
  Integer prod = d_ * y.d_;
  if (is_perfect_square(prod)) return y.s_ * Rational(isqrt(prod), d_);
  throw DomainError("arithmetic across different quadratic fields: sqrt(" + d_.get_str() +
                    ") and sqrt(" + y.d_.get_str() + ")");
}

Integer QuadraticSurd::c() const {
  Integer l;
  mpz_lcm(l.get_mpz_t(), r_.get_den_mpz_t(), s_.get_den_mpz_t());
  return l;
}

Integer QuadraticSurd::a() const {
  Integer cc = c();
  return Integer(r_.get_num() * (cc / r_.get_den()));
}

Integer QuadraticSurd::b() const {
  Integer cc = c();
  return Integer(s_.get_num() * (cc / s_.get_den()));
}

int QuadraticSurd::sign() const { return sign_of(r_, s_, d_); }

Integer QuadraticSurd::floor() const {
  Integer cc = c();
  Integer aa = a();
  Integer bb = b();
  Integer f = aa;
  if (bb != 0) {
    Integer sq = bb * bb * d_;
    Integer root = isqrt(sq);
    if (bb > 0) {
      f += root;
    } else {
      f -= root;
      if (root * root != sq) f -= 1;
    }
  }
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), f.get_mpz_t(), cc.get_mpz_t());
  return q;
}

RationalInterval QuadraticSurd::enclosure(unsigned precision_bits) const {
  if (d_ == 0) return {r_, r_};
  Rational lo = sqrt_bound(d_, precision_bits, MPFR_RNDD);
  Rational hi = sqrt_bound(d_, precision_bits, MPFR_RNDU);
  if (s_ > 0) return {r_ + s_ * lo, r_ + s_ * hi};
  return {r_ + s_ * hi, r_ + s_ * lo};
}

double QuadraticSurd::to_double() const {
  RationalInterval e = enclosure(96);
  Rational mid = (e.lo + e.hi) / 2;
  return mid.get_d();
}

std::string QuadraticSurd::to_string() const {
  if (d_ == 0) return mlspec::to_string(r_);
  Integer aa = a(), bb = b(), cc = c();
  std::string num;
  if (aa != 0) num = aa.get_str();
  Integer mag = abs(bb);
  if (bb < 0) {
    num += "-";
  } else if (aa != 0) {
    num += "+";
  }
  if (mag != 1) num += mag.get_str() + "*";
  num += "sqrt(" + d_.get_str() + ")";
  if (cc == 1) return num;
  if (aa == 0 && bb > 0) return num + "/" + cc.get_str();
  return "(" + num + ")/" + cc.get_str();
}

std::string QuadraticSurd::to_decimal(int digits) const {
  RationalInterval e = enclosure(static_cast<unsigned>(digits) * 4 + 64);
  return mlspec::to_decimal((e.lo + e.hi) / 2, digits);
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(Raw{}, r_, -s_, d_); }

QuadraticSurd QuadraticSurd::reciprocal() const {
  if (d_ == 0) {
    if (r_ == 0) throw DomainError("division by zero");
    return QuadraticSurd(Rational(1) / r_);
  }
  Rational norm = r_ * r_ - s_ * s_ * d_;
  return QuadraticSurd(Raw{}, r_ / norm, -s_ / norm, d_);
}

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(Raw{}, -r_, -s_, d_); }

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& y) {
  if (d_ == 0) {
    r_ += y.r_;
    s_ = y.s_;
    d_ = y.d_;
    return *this;
  }
  s_ += coefficient_in_field(y);
  r_ += y.r_;
  if (s_ == 0) d_ = 0;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& y) { return *this += -y; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& y) {
  if (y.d_ == 0) {
    r_ *= y.r_;
    s_ *= y.r_;
  } else if (d_ == 0) {
    Rational r = r_;
    r_ = r * y.r_;
    s_ = r * y.s_;
    d_ = y.d_;
  } else {
    Rational sy = coefficient_in_field(y);
    Rational r = r_ * y.r_ + s_ * sy * d_;
    s_ = r_ * sy + s_ * y.r_;
    r_ = std::move(r);
  }
  if (s_ == 0) d_ = 0;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& y) {
  return *this *= y.reciprocal();
}

std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
  int s = sign_of(x.r_ - y.r_, x.s_, x.d_, -y.s_, y.d_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return (x <=> y) == 0; }

std::strong_ordering surd_compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  return x <=> y;
}

QuadraticSurd surd_from_quadratic(const Integer& A, const Integer& B, const Integer& C) {
  if (A == 0) {
    if (B == 0) throw DomainError("degenerate quadratic");
    Rational x = make_rational(-C, B);
    if (x <= 0) throw DomainError("quadratic has no positive root");
    return QuadraticSurd(x);
  }
  Integer disc = B * B - 4 * A * C;
  if (disc < 0) throw DomainError("quadratic has no real root");
  Integer sign = A > 0 ? 1 : -1;
  QuadraticSurd root(Integer(-B), sign, Integer(2 * A), disc);
  if (root.sign() <= 0) throw DomainError("quadratic has no positive root");
  return root;
}

const QuadraticSurd& min(const QuadraticSurd& x, const QuadraticSurd& y) { return y < x ? y : x; }
const QuadraticSurd& max(const QuadraticSurd& x, const QuadraticSurd& y) { return x < y ? y : x; }

}  // namespace mlspec
