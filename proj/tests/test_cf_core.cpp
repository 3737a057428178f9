#include <gtest/gtest.h>

#include "mlspec/errors.hpp"
#include "mlspec/numeric.hpp"
#include "mlspec/surd.hpp"
#include "mlspec/word.hpp"
#include "oracles.hpp"

using namespace mlspec;

namespace {

QuadraticSurd S(long v) { return QuadraticSurd(v); }
QuadraticSurd sqrt_of(long v) { return QuadraticSurd::sqrt(Rational(v)); }

}  // namespace

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("3e-9"), Rational(3, 1000000000));
  EXPECT_EQ(parse_rational("3.05"), Rational(61, 20));
  EXPECT_THROW(parse_rational("abc"), DomainError);
}

TEST(Numeric, DirectedDecimal) {
  Rational x(2, 3);
  EXPECT_EQ(to_decimal(x, 3, Rounding::Down), "0.666");
  EXPECT_EQ(to_decimal(x, 3, Rounding::Up), "0.667");
  EXPECT_EQ(to_decimal(Rational(-2, 3), 3, Rounding::Down), "-0.667");
}

TEST(Numeric, FloorExpTable) {
  for (unsigned k = 0; k < oracle::kFloorExp.size(); ++k) {
    EXPECT_EQ(certified::floor_exp(k), Integer(oracle::kFloorExp[k])) << k;
  }
}

TEST(Numeric, FloorLogAtBoundaries) {
  for (unsigned k = 1; k < oracle::kFloorExp.size(); ++k) {
    Integer e(oracle::kFloorExp[k]);
    // floor(e^k) < e^k < floor(e^k) + 1
    EXPECT_EQ(certified::floor_log(e), k - 1) << k;
    EXPECT_EQ(certified::floor_log(Integer(e + 1)), k) << k;
  }
  EXPECT_EQ(certified::floor_log(Integer(1)), 0u);
  EXPECT_EQ(certified::floor_log(Rational(130)), 4u);
}

TEST(Numeric, LogEnclosureContainsValue) {
  for (long n : {2L, 3L, 10L, 40L, 1000003L}) {
    RationalInterval l = certified::log(Rational(n));
    double v = std::log(static_cast<double>(n));
    EXPECT_LE(l.lo.get_d(), v + 1e-12);
    EXPECT_GE(l.hi.get_d(), v - 1e-12);
    EXPECT_LT(l.width(), Rational(1, 1000000000));
  }
}

TEST(Convergents, SmallExamples) {
  auto c1 = convergents(Word{1});
  EXPECT_EQ(c1.back().p, 1);
  EXPECT_EQ(c1.back().q, 1);
  auto c3 = convergents(Word{1, 2, 3});
  EXPECT_EQ(c3.back().p, 7);
  EXPECT_EQ(c3.back().q, 10);
  EXPECT_EQ(Rational(7, 10), oracle::cf_value({1, 2, 3}));
  EXPECT_EQ(convergents(Word{1, 1, 1, 1, 1}).back().q, 8);
  EXPECT_THROW(convergents(Word{}), DomainError);
}

TEST(Convergents, DeterminantAlternates) {
  auto cs = convergents(Word{3, 1, 4, 1, 5, 9, 2, 6});
  for (std::size_t k = 0; k < cs.size(); ++k) {
    int expected = (cs[k].n % 2 == 1) ? 1 : -1;
    EXPECT_EQ(cs[k].determinant(), expected) << k;
    EXPECT_GE(cs[k].q, cs[k].q_prev);
  }
}

TEST(Cylinder, Examples) {
  CylinderInterval a = cylinder(Word{1});
  EXPECT_EQ(a.left, Rational(1, 2));
  EXPECT_EQ(a.right, Rational(1));
  EXPECT_EQ(a.size, Rational(1, 2));
  CylinderInterval b = cylinder(Word{2});
  EXPECT_EQ(b.left, Rational(1, 3));
  EXPECT_EQ(b.right, Rational(1, 2));
  EXPECT_EQ(b.size, Rational(1, 6));
  EXPECT_EQ(cylinder_size(Word{1, 2, 3}), Rational(1, 130));
  EXPECT_EQ(inverse_cylinder_size(Word{1, 2, 3}), 130);
  EXPECT_EQ(cylinder(Word{}).size, Rational(1));
}

TEST(Cylinder, MatchesNestedDivision) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = oracle::random_word(rng, 6, 12);
    CylinderInterval c = cylinder(w);
    EXPECT_EQ(c.size, oracle::cylinder_size(w.vector()));
    EXPECT_EQ(c.size, c.right - c.left);
    Rational v = oracle::cf_value(w.vector());
    EXPECT_TRUE(v == c.left || v == c.right);
  }
}

TEST(RFloor, Examples) {
  EXPECT_EQ(r_floor(Word{1}), 0u);
  EXPECT_EQ(r_floor(Word{2}), 1u);
  EXPECT_EQ(r_floor(Word{1, 2, 3}), 4u);
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(Word{1, 2, 3}), (Word{3, 2, 1}));
  EXPECT_EQ(continuant(Word{3, 2, 1}).q, 10);
  EXPECT_EQ(transpose(Word{2, 2}), (Word{2, 2}));
  EXPECT_EQ(transpose(Word{}), Word{});
}

TEST(Mobius, GaussBranch) {
  MobiusMap g1 = mobius_branch(Word{1});
  EXPECT_EQ(g1(Rational(2, 3)), Rational(1, 2));  // (1 - x) / x
  MobiusMap g2 = mobius_branch(Word{2});
  EXPECT_EQ(g2(Rational(5, 11)), Rational(1, 5));
  QuadraticSurd golden = (sqrt_of(5) - 1) / 2;
  EXPECT_EQ(g1(golden), golden);
}

TEST(Mobius, DerivativeRange) {
  RationalInterval d1 = derivative_range(Word{1});
  EXPECT_EQ(d1.lo, 1);
  EXPECT_EQ(d1.hi, 4);
  RationalInterval d3 = derivative_range(Word{1, 2, 3});
  EXPECT_EQ(d3.lo, 100);
  EXPECT_EQ(d3.hi, 400);
  // |d/dx (2x - 1)/(-x)| = 1/x^2, at x = 1/3 equals 9.
  RationalInterval d2 = derivative_range(Word{2});
  EXPECT_TRUE(d2.contains(Rational(9)));
  EXPECT_TRUE(d2.contains(Rational(4)));
}

TEST(Surd, Canonical) {
  QuadraticSurd x(Integer(2), Integer(4), Integer(6), Integer(12));  // (2 + 4 sqrt(12)) / 6
  EXPECT_EQ(x.d(), 3);
  EXPECT_EQ(x.a(), 1);
  EXPECT_EQ(x.b(), 4);
  EXPECT_EQ(x.c(), 3);
  EXPECT_EQ(sqrt_of(12).to_string(), "2*sqrt(3)");
  EXPECT_EQ(((sqrt_of(5) - 1) / 2).to_string(), "(-1+sqrt(5))/2");
  EXPECT_TRUE(sqrt_of(16).is_rational());
}

TEST(Surd, FromQuadratic) {
  EXPECT_EQ(surd_from_quadratic(1, 1, -1), (sqrt_of(5) - 1) / 2);
  EXPECT_EQ(surd_from_quadratic(1, 2, -1), sqrt_of(2) - 1);
  EXPECT_EQ(surd_from_quadratic(3, 3, -1), (sqrt_of(21) - 3) / 6);
  EXPECT_THROW(surd_from_quadratic(1, 2, 1), DomainError);
}

TEST(Surd, Compare) {
  EXPECT_GT((sqrt_of(5) - 1) / 2, QuadraticSurd(Rational(3, 5)));
  EXPECT_EQ(surd_compare(sqrt_of(2) - 1, sqrt_of(2) - 1), std::strong_ordering::equal);
  EXPECT_LT(2 * sqrt_of(2), sqrt_of(221) / 5);
  EXPECT_LT(sqrt_of(2) + 1, sqrt_of(3) + Rational(7, 10));  // 2.414 < 2.432, cross-field
  EXPECT_GT(sqrt_of(5), sqrt_of(2) + Rational(8, 10));      // 2.236 > 2.214
}

TEST(Surd, ArithmeticMatchesDoubles) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> u(-20, 20);
  for (int i = 0; i < 200; ++i) {
    QuadraticSurd x = QuadraticSurd::from_parts(Rational(u(rng), 7), Rational(u(rng), 3), 6);
    QuadraticSurd y = QuadraticSurd::from_parts(Rational(u(rng), 5), Rational(u(rng), 2), 6);
    double xd = x.to_double(), yd = y.to_double();
    EXPECT_NEAR((x + y).to_double(), xd + yd, 1e-9);
    EXPECT_NEAR((x * y).to_double(), xd * yd, 1e-7);
    if (y.sign() != 0) EXPECT_NEAR((x / y).to_double(), xd / yd, 1e-6 * (1 + std::abs(xd / yd)));
    if (std::abs(xd - yd) > 1e-9) EXPECT_EQ(x < y, xd < yd);
  }
}

TEST(Surd, MixedFieldArithmeticThrows) {
  EXPECT_THROW(sqrt_of(2) + sqrt_of(3), DomainError);
  EXPECT_NO_THROW(sqrt_of(2) + sqrt_of(8));
}

TEST(Surd, FloorAndEnclosure) {
  EXPECT_EQ(sqrt_of(12).floor(), 3);
  EXPECT_EQ((-sqrt_of(2)).floor(), -2);
  RationalInterval e = sqrt_of(2).enclosure(64);
  EXPECT_LT(e.lo * e.lo, 2);
  EXPECT_GT(e.hi * e.hi, 2);
}
