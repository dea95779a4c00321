#include <gtest/gtest.h>

#include <random>

#include "lazyarith/rational.hpp"

namespace {

using namespace lazyarith;

template <class I>
class RationalAtLevel : public ::testing::Test {
 protected:
  static constexpr PrecisionLevel L = I::level;
  static I v(long long x) { return make_int<L>(x); }
};

using AllLevels = ::testing::Types<Int64, Int128, BigInt>;
TYPED_TEST_SUITE(RationalAtLevel, AllLevels);

TYPED_TEST(RationalAtLevel, Reduce) {
  auto a = this->v(6), b = this->v(4);
  reduce(a, b);
  EXPECT_EQ(a, this->v(3));
  EXPECT_EQ(b, this->v(2));

  a = this->v(-6), b = this->v(4);
  reduce(a, b);
  EXPECT_EQ(a, this->v(-3));
  EXPECT_EQ(b, this->v(2));

  a = this->v(6), b = this->v(-4);
  reduce(a, b);
  EXPECT_EQ(a, this->v(-3));
  EXPECT_EQ(b, this->v(2));

  a = this->v(0), b = this->v(5);
  reduce(a, b);
  EXPECT_EQ(a, this->v(0));
  EXPECT_EQ(b, this->v(1));

  a = this->v(1), b = this->v(0);
  EXPECT_THROW(reduce(a, b), division_by_zero);
}

TYPED_TEST(RationalAtLevel, Mulrat) {
  TypeParam e, f;
  mulrat(this->v(2), this->v(3), this->v(3), this->v(4), e, f);
  EXPECT_EQ(e, this->v(1));
  EXPECT_EQ(f, this->v(2));
  mulrat(this->v(0), this->v(7), this->v(5), this->v(9), e, f);
  EXPECT_EQ(e, this->v(0));
  EXPECT_EQ(f, this->v(1));
  EXPECT_THROW(mulrat(this->v(1), this->v(0), this->v(1), this->v(1), e, f), division_by_zero);
}

TYPED_TEST(RationalAtLevel, AddSubDivCmp) {
  TypeParam e, f;
  addrat(this->v(1), this->v(2), this->v(1), this->v(3), e, f);
  EXPECT_EQ(e, this->v(5));
  EXPECT_EQ(f, this->v(6));
  subrat(this->v(1), this->v(2), this->v(1), this->v(2), e, f);
  EXPECT_EQ(e, this->v(0));
  EXPECT_EQ(f, this->v(1));
  divrat(this->v(1), this->v(2), this->v(-3), this->v(4), e, f);
  EXPECT_EQ(e, this->v(-2));
  EXPECT_EQ(f, this->v(3));
  EXPECT_THROW(divrat(this->v(1), this->v(2), this->v(0), this->v(4), e, f), division_by_zero);

  EXPECT_EQ(ratcmp(this->v(2), this->v(4), this->v(1), this->v(2)), 0);
  EXPECT_EQ(ratcmp(this->v(1), this->v(3), this->v(1), this->v(2)), -1);
  EXPECT_EQ(ratcmp(this->v(1), this->v(-3), this->v(1), this->v(-2)), 1);
}

TYPED_TEST(RationalAtLevel, TextForm) {
  using R = Rat<TestFixture::L>;
  EXPECT_EQ(R::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(R::parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(R::parse("6/-4").to_string(), "-3/2");
  EXPECT_EQ(R::parse("4/2").to_string(), "2");
  EXPECT_EQ(R::parse("0/-9").to_string(), "0");
  EXPECT_EQ(R::parse("17").to_string(), "17");
  EXPECT_THROW(R::parse("1/0"), division_by_zero);
  EXPECT_THROW(R::parse("1/"), parse_error);
  EXPECT_THROW(R::parse("a/2"), parse_error);
}

TEST(Rational, OverflowIsInheritedFromIntegerGuards) {
  using I = Int64;
  constexpr auto L = PrecisionLevel::Fixed64;
  const I over = I::from_value(GuardBounds<64>::mul + 1);
  const I one = make_int<L>(1);
  I e, f;
  EXPECT_THROW(mulrat(over, one, one, one, e, f), overflow_signal);
  EXPECT_THROW(addrat(over, one, one, one, e, f), overflow_signal);
  EXPECT_THROW(ratcmp(over, one, one, one), overflow_signal);
  // Just inside the bound nothing signals.
  const I at = I::from_value(GuardBounds<64>::mul);
  EXPECT_NO_THROW(mulrat(at, one, one, one, e, f));
}

// A rational operation signals exactly when one of the integer operations it
// is built from would signal on the same operands.
TEST(Rational, SignalsIffAConstituentIntegerOpSignals) {
  constexpr auto L = PrecisionLevel::Fixed64;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> mag(-(1LL << 40), 1LL << 40);
  int signalled = 0;
  for (int i = 0; i < 20000; ++i) {
    auto pick = [&] {
      long long x = mag(rng) >> (rng() % 40);
      return make_int<L>(x == 0 ? 1 : x);
    };
    const Int64 a = pick(), b = pick(), c = pick(), d = pick();
    auto mul_signals = [](const Int64& x, const Int64& y) { return !safe_mul(x, y); };
    const bool expect_mul = mul_signals(a, c) || mul_signals(b, d);
    bool got = false;
    Int64 e, f;
    try {
      mulrat(a, b, c, d, e, f);
    } catch (const overflow_signal&) {
      got = true;
    }
    ASSERT_EQ(got, expect_mul);
    signalled += got;

    // addrat: a*d, c*b, b*d, then a*d + c*b.
    bool expect_add = mul_signals(a, d) || mul_signals(c, b) || mul_signals(b, d);
    if (!expect_add) {
      Int64 ad, cb;
      mulint(a, d, ad);
      mulint(c, b, cb);
      expect_add = !safe_add(ad, cb);
    }
    got = false;
    try {
      addrat(a, b, c, d, e, f);
    } catch (const overflow_signal&) {
      got = true;
    }
    ASSERT_EQ(got, expect_add);
  }
  EXPECT_GT(signalled, 0);
}

template <PrecisionLevel L>
bool canonical(const Rat<L>& r) {
  return sign(r.den()) > 0 && comp(gcd(r.num(), r.den()), make_int<L>(1)) == 0;
}

TEST(Rational, CanonicalClosureAndFieldLawsAtExtended) {
  constexpr auto X = PrecisionLevel::Extended;
  using R = Rat<X>;
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> small(-50, 50);
  auto pick = [&] {
    long long den = small(rng);
    if (den == 0) den = 1;
    return R::from_ints(small(rng), den);
  };
  const R zero;
  const R one = R::from_ints(1);
  for (int i = 0; i < 3000; ++i) {
    const R a = pick(), b = pick(), c = pick();
    for (const R& r : {a + b, a - b, a * b, (a + b) * c, -a}) ASSERT_TRUE(canonical(r)) << r.to_string();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + (-a), zero);
    if (!is_zero(a.num())) {
      ASSERT_EQ(a * (one / a), one);
      ASSERT_TRUE(canonical(one / a));
    }
    ASSERT_EQ(compare(a, b), -compare(b, a));
    ASSERT_EQ(compare(a - b, zero), compare(a, b));
  }
}

}  // namespace
