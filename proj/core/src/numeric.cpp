#include "mlspec/numeric.hpp"

#include <mpfr.h>

#include <cctype>
#include <mutex>
#include <vector>

#include "mlspec/errors.hpp"

namespace mlspec {

const char* rounding_name(Rounding r) {
  switch (r) {
    case Rounding::Down:
      return "lower";
    case Rounding::Up:
      return "upper";
    case Rounding::Exact:
      break;
  }
  return "exact";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&]() -> Rational {
    throw DomainError("malformed number: " + std::string(text));
  };
  if (text.empty()) return fail();
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) return fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    long e = 0;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i++] - '0');
      any = true;
      if (e > 100000) return fail();
    }
    if (!any) return fail();
    scale += exp_negative ? -e : e;
  }
  Integer num(digits, 10);
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    if (scale != 0) return fail();
    ++i;
    std::string d;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) d += text[i++];
    if (d.empty()) return fail();
    den = Integer(d, 10);
    if (den == 0) return fail();
  }
  if (i != text.size()) return fail();
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0) den *= p10;
  if (scale > 0) num *= p10;
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational pow(const Rational& x, long e) {
  Rational base = x;
  if (e < 0) {
    if (x == 0) throw DomainError("zero to a negative power");
    base = 1 / x;
    e = -e;
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

std::string to_decimal(const Rational& x, int digits, Rounding r) {
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = x * p10;
  Integer n;
  switch (r) {
    case Rounding::Down:
      n = floor(scaled);
      break;
    case Rounding::Up:
      n = ceil(scaled);
      break;
    case Rounding::Exact:
      n = scaled >= 0 ? floor(scaled + Rational(1, 2)) : ceil(scaled - Rational(1, 2));
      break;
  }
  bool negative = n < 0;
  Integer a = abs(n);
  std::string s = a.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace certified {

namespace {

class Mpfr {
 public:
  explicit Mpfr(unsigned bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

  Rational to_rational() {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

Rational eval_log(const Rational& x, unsigned bits, mpfr_rnd_t rnd) {
  Mpfr a(bits);
  mpfr_set_q(a.get(), x.get_mpq_t(), rnd);
  mpfr_log(a.get(), a.get(), rnd);
  return a.to_rational();
}

Rational eval_exp(const Rational& x, unsigned bits, mpfr_rnd_t rnd) {
  Mpfr a(bits);
  mpfr_set_q(a.get(), x.get_mpq_t(), rnd);
  mpfr_exp(a.get(), a.get(), rnd);
  return a.to_rational();
}

std::mutex table_mutex;
std::vector<Integer> exp_table{Integer(1)};

Integer compute_floor_exp(unsigned k) {
  for (unsigned bits = 64 + 2 * k;; bits *= 2) {
    Mpfr lo(bits), hi(bits);
    mpfr_set_ui(lo.get(), k, MPFR_RNDD);
    mpfr_set_ui(hi.get(), k, MPFR_RNDU);
    mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
    Integer a, b;
    mpfr_get_z(a.get_mpz_t(), lo.get(), MPFR_RNDD);
    mpfr_get_z(b.get_mpz_t(), hi.get(), MPFR_RNDD);
    if (a == b) return a;
  }
}

}  // namespace

RationalInterval log(const Rational& x, unsigned precision_bits) {
  if (x <= 0) throw DomainError("log of a nonpositive number");
  return {eval_log(x, precision_bits, MPFR_RNDD), eval_log(x, precision_bits, MPFR_RNDU)};
}

RationalInterval exp(const Rational& x, unsigned precision_bits) {
  return {eval_exp(x, precision_bits, MPFR_RNDD), eval_exp(x, precision_bits, MPFR_RNDU)};
}

Rational log_lower(const Rational& x, unsigned precision_bits) {
  if (x <= 0) throw DomainError("log of a nonpositive number");
  return eval_log(x, precision_bits, MPFR_RNDD);
}

Rational log_upper(const Rational& x, unsigned precision_bits) {
  if (x <= 0) throw DomainError("log of a nonpositive number");
  return eval_log(x, precision_bits, MPFR_RNDU);
}

Integer floor_exp(unsigned k) {
  std::lock_guard lock(table_mutex);
  while (exp_table.size() <= k) exp_table.push_back(compute_floor_exp(exp_table.size()));
  return exp_table[k];
}

unsigned floor_log(const Integer& n) {
  if (n < 1) throw DomainError("floor_log needs n >= 1");
  // n >= 2^(bits-1) gives a lower bound for log n; e^k is irrational for
  // k >= 1, so e^k < n exactly when floor(e^k) < n.
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  unsigned k = bits > 1 ? static_cast<unsigned>(static_cast<double>(bits - 1) * 0.6931) : 0;
  if (k > 0) --k;
  while (floor_exp(k + 1) < n) ++k;
  return k;
}

unsigned floor_log(const Rational& x) {
  if (x < 1) throw DomainError("floor_log needs x >= 1");
  unsigned k = floor_log(floor(x));
  // log x < k + 2 always; decide whether e^(k+1) < x.
  for (unsigned bits = 128;; bits *= 2) {
    RationalInterval e = exp(Rational(k + 1), bits);
    if (e.hi < x) return k + 1;
    if (e.lo > x) return k;
  }
}

}  // namespace certified

}  // namespace mlspec
