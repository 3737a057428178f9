#include <gtest/gtest.h>

#include "mlspec/errors.hpp"
#include "mlspec/tower.hpp"
#include "oracles.hpp"

using namespace mlspec;

TEST(Tower, HeightOneIsE) {
  auto e = tower_enclosure(tower(1));
  ASSERT_TRUE(e.has_value());
  EXPECT_NEAR(e->lo.get_d(), 2.718281828459045, 1e-15);
  EXPECT_LT(e->width(), Rational(1, 1000000000));
  auto t3 = tower_enclosure(tower(3));
  ASSERT_TRUE(t3.has_value());
  EXPECT_NEAR(t3->lo.get_d(), static_cast<double>(oracle::kTower3), 1e-6);
  EXPECT_FALSE(tower_enclosure(tower(5)).has_value());
}

TEST(Tower, FourExceedsTwoToSixteen) {
  EXPECT_EQ(tower_compare(tower(4), Rational(65536)), std::strong_ordering::greater);
  EXPECT_GT(Rational(65536), pow(Rational(5), 6));
}

TEST(Tower, DominatesSixthPowers) {
  for (unsigned long n = 4; n <= 20; ++n) {
    EXPECT_EQ(tower_compare(tower(n), pow(Rational(n + 1), 6)), std::strong_ordering::greater) << n;
  }
  EXPECT_EQ(tower_compare(tower(2), pow(Rational(3), 6)), std::strong_ordering::less);
}

TEST(Tower, ZeroBaseNormalizes) {
  TowerExpr t = tower(Rational(0), 3);
  EXPECT_EQ(t.base, 1);
  EXPECT_EQ(t.height, 2u);
  EXPECT_EQ(tower_compare(tower(0), Rational(1)), std::strong_ordering::equal);
  EXPECT_EQ(tower_compare(tower(Rational(0), 1), Rational(1)), std::strong_ordering::equal);
}

TEST(Tower, TowerAgainstTower) {
  EXPECT_EQ(tower_compare(tower(7), tower(Rational(3), 5)), std::strong_ordering::greater);
  EXPECT_EQ(tower_compare(tower(Rational(3), 5), tower(7)), std::strong_ordering::less);
  EXPECT_EQ(tower_compare(tower(6), tower(6)), std::strong_ordering::equal);
  EXPECT_EQ(tower_compare(tower(Rational(2), 9), tower(Rational(5, 2), 9)), std::strong_ordering::less);
}

TEST(Tower, NegativeAndSmallRationals) {
  EXPECT_EQ(tower_compare(tower(Rational(-5), 1), Rational(0)), std::strong_ordering::greater);
  EXPECT_EQ(tower_compare(tower(Rational(-5), 1), Rational(1, 100)), std::strong_ordering::less);
  EXPECT_EQ(tower_compare(tower(1000), Rational(-3)), std::strong_ordering::greater);
}

TEST(Modulus, TenthHeightIndex) {
  ModulusBound m = modulus_delta_lower(Rational(1, 10), Rational(7, 2));
  EXPECT_EQ(static_cast<long>(m.height), oracle::kHeightTenth);
  EXPECT_EQ(m.c0, 160000);
  EXPECT_EQ(m.tau, Rational(1, 400));
  EXPECT_EQ(m.two_over_tau, 800);
  EXPECT_TRUE(m.chain_verified());
  EXPECT_LE(m.index_bound, m.height);
  EXPECT_EQ(m.denominator.height, m.height);
  EXPECT_EQ(m.denominator.base, 1);
}

TEST(Modulus, NearOneSeventh) {
  ModulusBound m = modulus_delta_lower(Rational(1, 7) - Rational(1, 1000000000), Rational(7, 2));
  EXPECT_EQ(static_cast<long>(m.height), oracle::kHeightSeventh);
  EXPECT_TRUE(m.chain_verified());
}

TEST(Modulus, RangeChecked) {
  EXPECT_THROW(modulus_delta_lower(Rational(1, 7), Rational(7, 2)), DomainError);
  EXPECT_THROW(modulus_delta_lower(Rational(0), Rational(7, 2)), DomainError);
}

TEST(Modulus, HeightDecreasesWithEpsilon) {
  for (long k = 8; k <= 40; k += 4) {
    EXPECT_TRUE(modulus_delta_lower(Rational(1, k), Rational(7, 2)).chain_verified()) << k;
  }
  EXPECT_LT(modulus_delta_lower(Rational(1, 8), Rational(7, 2)).height,
            modulus_delta_lower(Rational(1, 20), Rational(7, 2)).height);
}
