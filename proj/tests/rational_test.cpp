#include <stdexcept>

#include <gtest/gtest.h>

#include "quasiaffine/rational.hpp"
#include "test_support.hpp"

namespace {

using quasiaffine::ceil_rat;
using quasiaffine::eval_affine;
using quasiaffine::eval_map;
using quasiaffine::floor_rat;
using quasiaffine::Integer;
using quasiaffine::iterate_orbit;
using quasiaffine::Params;
using quasiaffine::parse_rational;
using quasiaffine::Rational;
using quasiaffine::testing::ints;
using quasiaffine::testing::q;
using quasiaffine::testing::RandomRationals;

TEST(Rational, CanonicalForm) {
  const Rational r = q(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(q(0, -7).den(), 1);
  EXPECT_THROW(q(1, 0), std::domain_error);
  EXPECT_THROW(q(1) / q(0), std::domain_error);
}

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(parse_rational("13/10"), q(13, 10));
  EXPECT_EQ(parse_rational("-2"), q(-2));
  EXPECT_EQ(parse_rational("4/2"), q(2));
  EXPECT_EQ(q(13, 10).str(), "13/10");
  EXPECT_EQ(q(-2).str(), "-2");
  EXPECT_EQ(q(0).str(), "0");
  EXPECT_EQ(q(-13, 5).str(), "-13/5");

  RandomRationals gen(7);
  for (int i = 0; i < 500; ++i) {
    const Rational r = gen.next();
    EXPECT_EQ(parse_rational(r.str()), r);
  }
}

TEST(Rational, ParseRejects) {
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("/3"), std::invalid_argument);
}

TEST(Rational, Ordering) {
  EXPECT_LT(q(-13, 5), q(-5, 2));
  EXPECT_GT(q(1, 3), q(33, 100));
  EXPECT_EQ(q(2, 4), q(1, 2));
}

TEST(Floor, Examples) {
  EXPECT_EQ(floor_rat(q(7, 2)), 3);
  EXPECT_EQ(floor_rat(q(-13, 5)), -3);
  EXPECT_EQ(floor_rat(q(4)), 4);
}

TEST(Ceil, Examples) {
  EXPECT_EQ(ceil_rat(q(-13, 5)), -2);
  EXPECT_EQ(ceil_rat(q(1, 4)), 1);
  EXPECT_EQ(ceil_rat(q(-3)), -3);
}

TEST(Floor, Properties) {
  RandomRationals gen(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = gen.next();
    const Integer fl = floor_rat(x);
    const Integer cl = ceil_rat(x);
    EXPECT_LE(Rational(fl), x);
    EXPECT_LT(x, Rational(fl + 1));
    EXPECT_LT(Rational(cl - 1), x);
    EXPECT_LE(x, Rational(cl));
    EXPECT_EQ(cl, -floor_rat(-x));
    const long long n = gen.integer(-1000, 1000);
    EXPECT_EQ(floor_rat(x + q(n)), fl + n);
  }
}

TEST(Floor, HugeValues) {
  const Integer big = Integer(1) << 300;
  EXPECT_EQ(floor_rat(Rational(-big - 1, Integer(2))), -(big / 2) - 1);
  EXPECT_EQ(ceil_rat(Rational(big + 1, Integer(2))), big / 2 + 1);
}

TEST(EvalAffine, Examples) {
  EXPECT_EQ(eval_affine({q(3, 2), q(13, 10)}, q(1)), q(14, 5));
  EXPECT_EQ(eval_affine({q(0), q(1)}, q(99)), q(1));
  EXPECT_EQ(eval_affine({q(-1), q(1, 2)}, q(1, 2)), q(0));
}

TEST(EvalMap, Examples) {
  EXPECT_EQ(eval_map({q(3, 2), q(13, 10)}, q(-1, 2)), 0);
  EXPECT_EQ(eval_map({q(1), q(0)}, q(5, 3)), 1);
  EXPECT_EQ(eval_map({q(-1), q(1, 2)}, q(1, 2)), 0);
}

TEST(EvalMap, AgreesWithFloorOfAffineAndIntegerPath) {
  RandomRationals gen(13);
  for (int i = 0; i < 2000; ++i) {
    const Params p{gen.next(4, 12), gen.next(4, 12)};
    const Rational x = gen.next(100, 25);
    const Integer fx = eval_map(p, x);
    EXPECT_EQ(fx, floor_rat(eval_affine(p, x)));
    EXPECT_EQ(eval_map(p, fx), eval_map(p, Rational(fx)));
  }
}

TEST(EvalMap, Monotone) {
  RandomRationals gen(17);
  for (int i = 0; i < 2000; ++i) {
    const Params p{gen.next(4, 12), gen.next(4, 12)};
    Rational x = gen.next(100, 25);
    Rational y = gen.next(100, 25);
    if (y < x) std::swap(x, y);
    if (p.lambda >= Rational(0))
      EXPECT_LE(eval_map(p, x), eval_map(p, y));
    else
      EXPECT_GE(eval_map(p, x), eval_map(p, y));
  }
}

TEST(IterateOrbit, Examples) {
  EXPECT_EQ(iterate_orbit({q(3, 2), q(13, 10)}, q(-1, 2), 4).tail, ints({0, 1, 2, 4}));
  EXPECT_EQ(iterate_orbit({q(-1), q(1, 2)}, q(1, 2), 3).tail, ints({0, 0, 0}));
  const auto empty = iterate_orbit({q(7, 3), q(-1, 9)}, q(5), 0);
  EXPECT_TRUE(empty.tail.empty());
  EXPECT_TRUE(empty.truncated);
}

TEST(IterateOrbit, TailFollowsMap) {
  const Params p{q(-23, 10), q(-14, 5)};
  const auto orbit = iterate_orbit(p, q(1, 3), 200);
  ASSERT_EQ(orbit.tail.size(), 200u);
  EXPECT_EQ(orbit.tail.front(), eval_map(p, q(1, 3)));
  for (std::size_t i = 1; i < orbit.tail.size(); ++i) EXPECT_EQ(orbit.tail[i], eval_map(p, orbit.tail[i - 1]));
  // Geometric growth well past 64 bits is represented exactly.
  EXPECT_GT(abs(orbit.tail.back()), Integer(1) << 128);
}

}  // namespace
