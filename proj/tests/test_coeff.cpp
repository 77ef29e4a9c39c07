#include <gtest/gtest.h>

#include <random>

#include "tropf5/coeff.hpp"

using namespace tropf5;

TEST(Valuation, ZeroIsInfinite) {
  RationalField q(Valuation::padic(3));
  EXPECT_TRUE(q.val(0).is_infinite());
}

TEST(Valuation, NineHalvesAtThree) {
  RationalField q(Valuation::padic(3));
  EXPECT_EQ(q.val(mpq_class(9, 2)), ExtInt(2));
  EXPECT_EQ(q.val(mpq_class(2, 9)), ExtInt(-2));
}

TEST(Valuation, TrivialIsZero) {
  RationalField q(Valuation::trivial());
  EXPECT_EQ(q.val(7), ExtInt(0));
  EXPECT_EQ(q.val(mpq_class(1, 1024)), ExtInt(0));
  EXPECT_TRUE(q.val(0).is_infinite());
}

TEST(Valuation, RejectsComposite) { EXPECT_THROW(Valuation::padic(12), std::invalid_argument); }

TEST(ExtInt, InfinityAbsorbsAndDominates) {
  EXPECT_TRUE((ExtInt(3) + ExtInt::infinity()).is_infinite());
  EXPECT_LT(ExtInt(1000), ExtInt::infinity());
  EXPECT_EQ(ExtInt::infinity(), ExtInt::infinity());
}

TEST(RationalField, ExactArithmetic) {
  RationalField q(Valuation::padic(2));
  EXPECT_EQ(q.add(mpq_class(1, 2), mpq_class(1, 3)), mpq_class(5, 6));
  EXPECT_THROW(q.div(1, 0), DivisionByZero);
}

TEST(CappedPadic, ProductPrecision) {
  CappedPadicField f(2, 10);
  auto a = f.from_rational(5);    // val 0, O(2^10)
  auto b = f.from_rational(24);   // val 3, O(2^10)
  EXPECT_EQ(f.val(a), ExtInt(0));
  EXPECT_EQ(f.val(b), ExtInt(3));
  auto ab = f.mul(a, b);
  EXPECT_EQ(ab.prec, 10);  // min(10 + 3, 10 + 0)
  EXPECT_EQ(f.to_rational(ab), mpq_class(120));
}

TEST(CappedPadic, ProductPrecisionMatchesRepresentatives) {
  // Any lifts a + 2^10 s, b + 2^10 t agree on the product modulo 2^10.
  CappedPadicField f(2, 10);
  const mpz_class a = 5, b = 24, m = 1024;
  auto ab = f.mul(f.from_rational(mpq_class(a)), f.from_rational(mpq_class(b)));
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      mpz_class lo = (a + s * m) * (b + t * m);
      mpz_class d = lo - f.to_rational(ab).get_num();
      EXPECT_EQ(mpz_class(d % m), 0);
    }
}

TEST(CappedPadic, CancellationGivesZeroOfPrecision) {
  CappedPadicField f(3, 12);
  auto a = f.from_rational(mpq_class(7, 5));
  auto z = f.add(a, f.neg(a));
  EXPECT_TRUE(f.is_zero(z));
  EXPECT_FALSE(z.is_exact_zero());
  EXPECT_EQ(z.prec, 12);
}

TEST(CappedPadic, RoundTripsThroughRationals) {
  CappedPadicField f(5, 20);
  for (mpq_class q : {mpq_class(1, 3), mpq_class(-7), mpq_class(25, 4), mpq_class(3, 125)}) {
    auto x = f.from_rational(q);
    EXPECT_EQ(f.val(x), RationalField(Valuation::padic(5)).val(q));
    auto back = f.from_rational(f.to_rational(x), x.prec);
    EXPECT_EQ(back, x);
  }
}

TEST(CappedPadic, DivisionByIndistinguishableZeroThrows) {
  CappedPadicField f(2, 8);
  EXPECT_THROW(f.div(f.one(), f.zero_of_precision(8)), PrecisionExhausted);
  EXPECT_THROW(f.div(f.one(), f.zero()), DivisionByZero);
}

TEST(PrecisionLoss, AbsoluteDigits) {
  CappedPadicField f(2, 50);
  EXPECT_EQ(precision_loss(50, f.from_rational(3, 50)), 0);
  EXPECT_EQ(precision_loss(50, f.from_rational(3, 42)), 8);
}

TEST(CappedPadic, FieldAxiomsOnRandomUnits) {
  CappedPadicField f(3, 30);
  RationalField q(Valuation::padic(3));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-500, 500);
  for (int k = 0; k < 200; ++k) {
    mpq_class a(dist(rng), 1 + std::abs(dist(rng)) * 3 + 1), b(dist(rng), 2);
    a.canonicalize();
    b.canonicalize();
    if (a == 0 || b == 0) continue;
    auto pa = f.from_rational(a), pb = f.from_rational(b);
    // Sum and product agree with exact arithmetic up to the tracked precision.
    const std::pair<CappedPadic, mpq_class> cases[] = {{f.add(pa, pb), a + b}, {f.mul(pa, pb), a * b}};
    for (const auto& [got, want] : cases) {
      if (want == 0) continue;
      auto exact = f.from_rational(want, got.prec);
      EXPECT_EQ(got, exact);
    }
    EXPECT_EQ(f.val(f.mul(pa, pb)), q.val(a) + q.val(b));
  }
}
