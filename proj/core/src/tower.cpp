#include "mlspec/tower.hpp"

#include "mlspec/errors.hpp"

namespace mlspec {

namespace {

enum class Cmp { Less, Equal, Greater, Unknown };

// T(x, n) against the closed interval [lo, hi]; an absent lo means -inf.
Cmp compare_interval(const Rational& x, unsigned long n, std::optional<Rational> lo,
                     Rational hi, unsigned bits) {
  for (; n > 0; --n) {
    if (hi <= 0) return Cmp::Greater;
    if (lo && *lo == 1 && hi == 1) {
      lo = hi = 0;
      continue;
    }
    if (lo && *lo > 0) {
      lo = certified::log_lower(*lo, bits);
    } else {
      lo.reset();
    }
    hi = certified::log_upper(hi, bits);
  }
  if (lo && x < *lo) return Cmp::Less;
  if (x > hi) return Cmp::Greater;
  if (lo && *lo == hi) return Cmp::Equal;
  return Cmp::Unknown;
}

std::strong_ordering to_ordering(Cmp c) {
  switch (c) {
    case Cmp::Less: return std::strong_ordering::less;
    case Cmp::Greater: return std::strong_ordering::greater;
    default: return std::strong_ordering::equal;
  }
}

Integer floor_certified(const Rational& scale, const Rational& arg) {
  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    RationalInterval l = certified::log(arg, bits);
    Integer a = floor(scale * l.lo), b = floor(scale * l.hi);
    if (a == b) return a;
  }
  throw ResourceError("floor of logarithm undecided");
}

}  // namespace

std::string TowerExpr::to_string() const {
  return "T(" + mlspec::to_string(base) + ", " + std::to_string(height) + ")";
}

TowerExpr tower(const Rational& x, unsigned long n) {
  if (x == 0 && n > 0) return {Rational(1), n - 1};
  return {x, n};
}

std::strong_ordering tower_compare(const TowerExpr& a, const Rational& b, unsigned max_bits) {
  if (a.height == 0) return cmp(a.base, b) <=> 0;
  for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
    Cmp c = compare_interval(a.base, a.height, b, b, bits);
    if (c != Cmp::Unknown) return to_ordering(c);
  }
  throw ResourceError("tower comparison undecided at " + std::to_string(max_bits) + " bits");
}

std::strong_ordering tower_compare(const TowerExpr& a, const TowerExpr& b, unsigned max_bits) {
  if (a.height >= b.height) {
    return tower_compare(TowerExpr{a.base, a.height - b.height}, b.base, max_bits);
  }
  return 0 <=> tower_compare(TowerExpr{b.base, b.height - a.height}, a.base, max_bits);
}

std::optional<RationalInterval> tower_enclosure(const TowerExpr& a, unsigned bits,
                                                const Rational& limit) {
  RationalInterval v{a.base, a.base};
  for (unsigned long k = 0; k < a.height; ++k) {
    if (v.hi > limit) return std::nullopt;
    v = {certified::exp(v.lo, bits).lo, certified::exp(v.hi, bits).hi};
  }
  return v;
}

ModulusBound modulus_delta_lower(const Rational& epsilon, const Rational& t) {
  if (!(epsilon > 0 && epsilon < Rational(1, 7))) {
    throw DomainError("epsilon must satisfy 0 < epsilon < 1/7");
  }
  ModulusBound m;
  m.epsilon = epsilon;
  m.tau = epsilon / 40;
  m.c0 = ceil(1 / (m.tau * m.tau));
  m.two_over_tau = ceil(2 / m.tau);

  Rational four_over = 4 / epsilon;
  Rational growth = 1 + 2 / m.tau;
  m.s0_limit = ceil(growth * certified::log_upper(four_over));

  Integer T = floor(t);
  Rational c0(m.c0);
  m.log_c1_upper = certified::log_upper(8) + 4 * certified::log_upper(Rational(T + 1)) + 2 * c0 +
                   certified::log_upper(Rational(m.two_over_tau)) +
                   certified::log_upper(c0 - 1);
  m.small_t = Rational(T) < 4 + 1 / (epsilon * certified::log_lower(2));

  Integer inv = floor(1 / epsilon);
  Integer index = inv + 2 * (m.s0_limit - 1) + 3;
  Integer height = floor_certified(161 / epsilon, four_over);
  m.index_bound = index.get_ui();
  m.height = height.get_ui();
  m.index_within_height = index <= height;
  m.c0_below_tower = tower_compare(tower(inv.get_ui()), c0) == std::strong_ordering::greater;
  // c1 < e^(e^c0) iff log c1 < e^c0.
  m.c1_below_tower = tower_compare(tower(c0, 1), m.log_c1_upper) == std::strong_ordering::greater;
  m.denominator = tower(m.height);
  return m;
}

}  // namespace mlspec
