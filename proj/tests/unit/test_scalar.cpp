#include <gtest/gtest.h>

#include "lieder/scalar.hpp"
#include "oracles.hpp"

using namespace lieder;

namespace {

const FieldSpec Q = FieldSpec::rationals();

TEST(FieldSpec, ParsesAndPrints) {
  EXPECT_EQ(FieldSpec::parse("Q"), Q);
  EXPECT_EQ(FieldSpec::parse("GF(7)"), FieldSpec::prime(7));
  EXPECT_EQ(FieldSpec::prime(7).to_string(), "GF(7)");
  EXPECT_EQ(FieldSpec::prime(7).characteristic(), 7u);
  EXPECT_EQ(Q.characteristic(), 0u);
  EXPECT_THROW(FieldSpec::parse("GF(8)"), InvalidPrime);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
  EXPECT_THROW(FieldSpec::prime(1), InvalidPrime);
  EXPECT_NO_THROW(FieldSpec::prime(2));
  EXPECT_NO_THROW(FieldSpec::prime(2147483647));
}

TEST(Scalar, PrimalityAgreesWithSieve) {
  std::vector<bool> composite(1000, false);
  for (std::uint64_t i = 2; i < 1000; ++i) {
    if (!composite[i]) {
      for (std::uint64_t j = i * i; j < 1000; j += i) composite[j] = true;
    }
    EXPECT_EQ(is_prime(i), !composite[i]) << i;
  }
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(Scalar, RationalsStayInLowestTerms) {
  const auto a = Scalar::from_fraction(6, -4, Q);
  EXPECT_EQ(a.rational().get_num(), -3);
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ((a + Scalar::from_fraction(1, 2, Q)).to_string(), "-1");
  EXPECT_EQ(Scalar::parse("10/4", Q).to_string(), "5/2");
}

TEST(Scalar, ResiduesAreLeastNonnegative) {
  const auto f = FieldSpec::prime(7);
  EXPECT_EQ(Scalar::from_integer(-1, f).residue(), 6u);
  EXPECT_EQ(Scalar::from_integer(15, f).residue(), 1u);
  EXPECT_EQ(Scalar::from_fraction(1, 2, f).residue(), 4u);
  EXPECT_EQ(Scalar::parse("-3", f).residue(), 4u);
  EXPECT_THROW(Scalar::parse("1/2", f), ParseError);
}

TEST(Scalar, CentralBinomialVanishesModFive) {
  const auto f = FieldSpec::prime(5);
  const mpz_class c = oracle::binomial(8, 4);
  ASSERT_EQ(c, 70);
  EXPECT_TRUE(Scalar::from_integer(c, f).is_zero());
  EXPECT_FALSE(Scalar::from_integer(oracle::binomial(4, 2), f).is_zero());
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar::zero(Q).inv(), DivisionByZero);
  EXPECT_THROW(Scalar::one(Q) / Scalar::zero(Q), DivisionByZero);
  const auto f = FieldSpec::prime(3);
  EXPECT_THROW(Scalar::from_integer(6, f).inv(), DivisionByZero);
  EXPECT_THROW(Scalar::from_fraction(1, 3, f), DivisionByZero);
}

TEST(Scalar, MixedFieldsThrow) {
  const auto a = Scalar::one(Q);
  const auto b = Scalar::one(FieldSpec::prime(5));
  EXPECT_THROW(a + b, FieldMismatch);
  EXPECT_THROW((void)(a == b), FieldMismatch);
  EXPECT_THROW(Scalar::one(FieldSpec::prime(5)) * Scalar::one(FieldSpec::prime(7)), FieldMismatch);
}

TEST(Scalar, WrongAccessorThrows) {
  EXPECT_ANY_THROW((void)Scalar::one(Q).residue());
  EXPECT_ANY_THROW((void)Scalar::one(FieldSpec::prime(3)).rational());
}

TEST(Scalar, FieldAxiomsHoldOnRandomElements) {
  gen::Source src(7);
  for (const auto f : {Q, FieldSpec::prime(2), FieldSpec::prime(5), FieldSpec::prime(101)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = src.scalar(f);
      const auto b = src.scalar(f);
      const auto c = src.scalar(f);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(-(-a), a);
      EXPECT_EQ(a.canonical(), a);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inv()).is_one());
        EXPECT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(Scalar, PrimeFieldHasCharacteristicP) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 31u}) {
    const auto f = FieldSpec::prime(p);
    Scalar sum = Scalar::zero(f);
    for (std::uint64_t i = 0; i < p; ++i) sum += Scalar::one(f);
    EXPECT_TRUE(sum.is_zero()) << p;
  }
}

TEST(Scalar, LargePrimeProductsDoNotOverflow) {
  const auto f = FieldSpec::prime(2147483647);
  const auto a = Scalar::from_integer(2147483646, f);
  EXPECT_TRUE((a * a).is_one());
  EXPECT_EQ((a + a).residue(), 2147483645u);
}

}  // namespace
