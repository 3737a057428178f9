#include <gtest/gtest.h>

#include "mlspec/errors.hpp"
#include "mlspec/exact_order.hpp"
#include "mlspec/spectra_facts.hpp"
#include "mlspec/symbolic.hpp"
#include "oracles.hpp"

using namespace mlspec;

namespace {

QuadraticSurd sqrt_of(long v) { return QuadraticSurd::sqrt(Rational(v)); }

}  // namespace

TEST(Markov, TriplesMatchBruteForce) {
  for (long z_max : {1L, 5L, 30L, 1000L}) {
    std::vector<MarkovTriple> got = markov_triples(Integer(z_max));
    std::vector<oracle::Triple> want = oracle::markov_triples_brute(z_max);
    ASSERT_EQ(got.size(), want.size()) << z_max;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].x, want[i].x);
      EXPECT_EQ(got[i].y, want[i].y);
      EXPECT_EQ(got[i].z, want[i].z);
      EXPECT_TRUE(got[i].satisfies_equation());
    }
  }
  EXPECT_THROW(markov_triples(Integer(0)), DomainError);
}

TEST(Markov, LargeTriplesSatisfyEquation) {
  std::vector<MarkovTriple> t = markov_triples(Integer("1000000000000"));
  EXPECT_GT(t.size(), 50u);
  for (const MarkovTriple& m : t) {
    EXPECT_TRUE(m.satisfies_equation());
    EXPECT_LE(m.x, m.y);
    EXPECT_LE(m.y, m.z);
  }
}

TEST(Markov, ValuesBelowThree) {
  std::vector<QuadraticSurd> k = markov_spectrum_below_3(Integer(5));
  ASSERT_EQ(k.size(), 3u);
  EXPECT_EQ(k[0], sqrt_of(5));
  EXPECT_EQ(k[1], 2 * sqrt_of(2));
  EXPECT_EQ(k[2], sqrt_of(221) / 5);
  EXPECT_NEAR(k[2].to_double(), static_cast<double>(oracle::kSqrt221Over5), 1e-15);
}

TEST(Markov, ValuesIncreaseTowardThree) {
  std::vector<MarkovTriple> triples = markov_triples(Integer(100000));
  std::vector<QuadraticSurd> k = markov_spectrum_below_3(Integer(100000));
  for (std::size_t i = 0; i < k.size(); ++i) {
    EXPECT_LT(k[i], QuadraticSurd(3));
    if (i > 0) EXPECT_LT(k[i - 1], k[i]);
  }
  for (const MarkovTriple& m : triples) {
    QuadraticSurd lower = 3 - QuadraticSurd(Rational(5) / (m.z * m.z));
    EXPECT_GT(markov_value_for(m.z), lower);
  }
}

TEST(Markov, PeriodsRealizeValues) {
  EXPECT_EQ(markov_value_periodic(PeriodicWord(Word{1})), markov_value_for(1));
  EXPECT_EQ(markov_value_periodic(PeriodicWord(Word{2})), markov_value_for(2));
  EXPECT_EQ(markov_value_periodic(PeriodicWord(Word{2, 2, 1, 1})), markov_value_for(5));
}

TEST(Freiman, Constant) {
  QuadraticSurd c = freiman_constant();
  EXPECT_EQ(c.a(), Integer(2221564096));
  EXPECT_EQ(c.b(), 283748);
  EXPECT_EQ(c.c(), 491993569);
  EXPECT_EQ(c.d(), 462);
  EXPECT_NEAR(c.to_double(), static_cast<double>(oracle::kFreiman), 1e-12);
  EXPECT_GT(c, sqrt_of(12));
}

TEST(Jarnik, Values) {
  EXPECT_NEAR(jarnik_lower(9).get_d(), static_cast<double>(oracle::kJarnik9), 1e-10);
  EXPECT_NEAR(jarnik_lower(10).get_d(), static_cast<double>(oracle::kJarnik10), 1e-10);
  EXPECT_NEAR(jarnik_lower(100).get_d(), static_cast<double>(oracle::kJarnik100), 1e-10);
  EXPECT_LE(jarnik_lower(9).get_d(), 1 - 1 / (9 * std::log(2.0)));
  EXPECT_THROW(jarnik_lower(8), DomainError);
}

TEST(Hall, IntervalEndpoints) {
  EXPECT_NEAR(hall_lo().to_double(), static_cast<double>(oracle::kHallLo), 1e-15);
  EXPECT_NEAR(hall_hi().to_double(), static_cast<double>(oracle::kHallHi), 1e-15);
  EXPECT_EQ(c4_min() + c4_min(), hall_lo());
  EXPECT_EQ(c4_max() + c4_max(), hall_hi());
}

TEST(Hall, Coverage) {
  for (unsigned depth : {1u, 2u, 3u}) {
    HallCoverage r = hall_coverage(depth);
    EXPECT_TRUE(r.covered) << depth;
    EXPECT_TRUE(r.gaps.empty());
    EXPECT_EQ(r.extent.lo, hall_lo());
    EXPECT_EQ(r.extent.hi, hall_hi());
    EXPECT_EQ(r.cylinders, static_cast<std::size_t>(1) << (2 * depth));
  }
  EXPECT_THROW(hall_coverage(0), DomainError);
  EXPECT_THROW(hall_coverage(12, 1000), ResourceError);
}

TEST(Hall, HullsNest) {
  SurdInterval parent = c4_hull(Word{2, 3});
  for (Digit d = 1; d <= 4; ++d) {
    SurdInterval child = c4_hull(Word{2, 3, d});
    EXPECT_LE(parent.lo, child.lo);
    EXPECT_LE(child.hi, parent.hi);
  }
}

TEST(Hall, DecomposeExamples) {
  HallSplit sym = hall_decompose(2 * (sqrt_of(2) - 1), 6);
  EXPECT_EQ(sym.alpha, Word::repeat(2, 6));
  EXPECT_EQ(sym.beta, Word::repeat(2, 6));
  HallSplit low = hall_decompose(sqrt_of(2) - 1, 6);
  EXPECT_EQ(low.alpha, (Word{4, 1, 4, 1, 4, 1}));
  EXPECT_EQ(low.beta, (Word{4, 1, 4, 1, 4, 1}));
  QuadraticSurd s(Rational(9, 10));
  HallSplit h = hall_decompose(s, 8);
  EXPECT_LE(h.sum.lo, s);
  EXPECT_LE(s, h.sum.hi);
  EXPECT_LT(h.sum.hi - h.sum.lo, QuadraticSurd(Rational(1, 10000)));
  EXPECT_THROW(hall_decompose(QuadraticSurd(Rational(2)), 4), DomainError);
}

TEST(Hall, DecomposeRandomTargets) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 40; ++i) {
    QuadraticSurd s(Rational(4143 + static_cast<long>(rng() % 12425), 10000));
    HallSplit h = hall_decompose(s, 10);
    EXPECT_TRUE(h.alpha.bounded_by(4));
    EXPECT_TRUE(h.beta.bounded_by(4));
    EXPECT_LE(h.sum.lo, s);
    EXPECT_LE(s, h.sum.hi);
  }
}

TEST(ExactOrder, PlanChoices) {
  ExactOrderWord w = exact_order_word(Rational(15, 2), 2);
  EXPECT_EQ(w.plan.m, 4u);
  EXPECT_EQ(w.plan.n, 7u);
  EXPECT_EQ(w.plan.s, Rational(1, 2));
  ExactOrderWord v = exact_order_word(Rational(51, 5), 2);
  EXPECT_EQ(v.plan.m, 7u);
  EXPECT_EQ(v.plan.n, 9u);
  EXPECT_EQ(v.plan.s, Rational(6, 5));
  EXPECT_THROW(exact_order_word(Rational(13, 2), 2), DomainError);
  EXPECT_THROW(exact_order_word(Rational(15, 2), 0), DomainError);
  EXPECT_THROW(exact_order_word(Rational(15, 2), max_insertions + 1), ResourceError);
}

TEST(ExactOrder, FirstBlockLayout) {
  ExactOrderWord w = exact_order_word(Rational(15, 2), 1);
  const ExactOrderPlan& p = w.plan;
  Word expected{1, 5, p.beta[0], 7, p.alpha[0], 5, 1};
  EXPECT_EQ(w.word, expected);
  EXPECT_TRUE(in_hall_interval(QuadraticSurd(p.s)));
}

TEST(ExactOrder, BlocksMatchTemplates) {
  for (InsertionVariant v : {InsertionVariant::Tilde, InsertionVariant::Hat}) {
    ExactOrderOptions o;
    o.variant = v;
    o.z = Word{1, 2, 3};
    ExactOrderWord w = exact_order_word(Rational(83, 10), 4, o);
    const ExactOrderPlan& p = w.plan;
    std::size_t cursor = 0, c_index = 0;
    std::size_t factorial = 1;
    for (const InsertedBlock& b : w.blocks) {
      factorial *= b.r;
      for (; c_index < factorial; ++c_index, ++cursor) {
        EXPECT_EQ(w.word[cursor], o.z[c_index % 3]);
      }
      ASSERT_EQ(b.start, cursor);
      std::size_t k = v == InsertionVariant::Tilde ? 2 * b.r - 1 : 2 * b.r;
      EXPECT_EQ(b.length, 2 * k + 3);
      EXPECT_EQ(w.word[cursor], p.m + 1);
      for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(w.word[cursor + 1 + i], p.beta[k - 1 - i]);
      EXPECT_EQ(w.word[cursor + 1 + k], p.n);
      EXPECT_EQ(b.center, cursor + 1 + k);
      for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(w.word[cursor + 2 + k + i], p.alpha[i]);
      EXPECT_EQ(w.word[cursor + 2 + 2 * k], p.m + 1);
      EXPECT_EQ(Word(std::vector<Digit>(w.word.vector().begin() + static_cast<long>(cursor),
                                        w.word.vector().begin() + static_cast<long>(cursor + b.length))),
                insertion_block(p, b.r));
      cursor += b.length;
    }
  }
}

TEST(ExactOrder, HatUsesOneMoreDigitPerSide) {
  ExactOrderOptions hat;
  hat.variant = InsertionVariant::Hat;
  ExactOrderWord a = exact_order_word(Rational(15, 2), 3);
  ExactOrderWord b = exact_order_word(Rational(15, 2), 3, hat);
  for (unsigned r = 1; r <= 3; ++r) {
    EXPECT_EQ(insertion_block(b.plan, r).size(), insertion_block(a.plan, r).size() + 2);
  }
}

TEST(ExactOrder, VerifyConverges) {
  ExactOrderReport four = exact_order_verify(exact_order_word(Rational(15, 2), 4), Rational(1, 10000));
  EXPECT_TRUE(four.pass);
  EXPECT_TRUE(four.others_below);
  ASSERT_EQ(four.rows.size(), 4u);
  for (std::size_t i = 1; i < four.rows.size(); ++i) {
    EXPECT_LT(four.rows[i].distance, four.rows[i - 1].distance);
  }
  ExactOrderReport one = exact_order_verify(exact_order_word(Rational(15, 2), 1), Rational(1, 100000000));
  EXPECT_FALSE(one.pass);
}

TEST(ExactOrder, OtherTargets) {
  for (Rational t : {Rational(51, 5), Rational(7), Rational(97, 10)}) {
    ExactOrderReport r = exact_order_verify(exact_order_word(t, 4), Rational(1, 1000));
    EXPECT_TRUE(r.others_below) << t;
    EXPECT_TRUE(r.pass) << t;
  }
}
