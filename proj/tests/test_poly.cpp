#include <gtest/gtest.h>

#include <random>

#include "tropf5/poly.hpp"

using namespace tropf5;

namespace {

RationalField padic(unsigned long p) { return RationalField(Valuation::padic(p)); }

template <class R>
auto poly(const R& ring, std::initializer_list<std::pair<mpq_class, Monomial>> ts) {
  return ring.from_rational_terms(std::vector<std::pair<mpq_class, Monomial>>(ts));
}

}  // namespace

TEST(TropicalOrder, ValuationBeatsTiebreak) {
  auto f = padic(3);
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  Term<mpq_class> a{3, Monomial{2, 0}}, b{1, Monomial{0, 2}};
  EXPECT_EQ(ring.compare_terms(a, b), std::strong_ordering::less);
}

TEST(TropicalOrder, TrivialValuationIsTiebreak) {
  RationalField f(Valuation::trivial());
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  Term<mpq_class> a{1, Monomial{1, 1}}, b{1, Monomial{0, 2}};
  EXPECT_EQ(ring.compare_terms(a, b), std::strong_ordering::greater);
}

TEST(TropicalOrder, WeightDecides) {
  auto f = padic(2);
  PolyRing<RationalField> ring(f, TropicalOrder({1, -3, 2}, Tiebreak::grevlex), {"x", "y", "z"});
  Term<mpq_class> x{1, Monomial{1, 0, 0}}, y{1, Monomial{0, 1, 0}};
  EXPECT_EQ(ring.compare_terms(x, y), std::strong_ordering::less);
}

TEST(TropicalOrder, RationalWeights) {
  TropicalOrder o({mpq_class(1, 2), mpq_class(-1, 3)}, Tiebreak::lex);
  EXPECT_EQ(o.compare_monomials(Monomial{0, 1}, Monomial{1, 0}), std::strong_ordering::greater);
  EXPECT_EQ(o.compare(1, Monomial{0, 1}, 0, Monomial{1, 0}), std::strong_ordering::less);
}

TEST(TropicalOrder, MultiplicativeOnUnitMonomials) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 4), w(-5, 5);
  for (int k = 0; k < 500; ++k) {
    TropicalOrder o({mpq_class(w(rng), 1 + (k % 3)), mpq_class(w(rng)), mpq_class(w(rng))},
                    k % 2 ? Tiebreak::lex : Tiebreak::grevlex);
    Monomial a{e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng)}, g{e(rng), e(rng), e(rng)};
    const int da = a.degree(), db = b.degree();
    if (da != db) continue;
    EXPECT_EQ(o.compare_monomials(a, b), o.compare_monomials(g * a, g * b));
  }
}

TEST(Polynomial, LeadingTerm) {
  auto f = padic(2);
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  EXPECT_EQ(poly(ring, {{1, {1, 0}}, {1, {0, 1}}}).leading_monomial(), (Monomial{1, 0}));
  auto g = poly(ring, {{2, {1, 0}}, {1, {0, 1}}});
  EXPECT_EQ(g.leading_monomial(), (Monomial{0, 1}));
}

TEST(Polynomial, LeadingMonomialIsMaximal) {
  for (auto tb : {Tiebreak::grevlex, Tiebreak::lex}) {
    RationalField f(Valuation::trivial());
    PolyRing<RationalField> ring(f, TropicalOrder({0, 1}, tb), {"x", "y"});
    auto g = poly(ring, {{1, {2, 0}}, {1, {1, 1}}, {1, {0, 2}}});
    ASSERT_EQ(g.size(), 3u);
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_TRUE((ring.compare_terms(g[0], g[i])) > 0);
  }
}

TEST(Polynomial, ArithmeticAndResort) {
  auto f = padic(2);
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  auto p = poly(ring, {{1, {1, 0}}, {1, {0, 1}}});
  EXPECT_TRUE(ring.add(p, ring.neg(p)).is_zero());
  auto s = ring.add(p, poly(ring, {{2, {1, 0}}}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.leading_term().coeff, 3);
  EXPECT_EQ(s.leading_monomial(), (Monomial{1, 0}));
  EXPECT_TRUE(ring.is_sorted(s));
  auto m = ring.mul_term({1, Monomial{0, 1}}, poly(ring, {{1, {2, 0}}}));
  EXPECT_EQ(m.leading_monomial(), (Monomial{2, 1}));
}

TEST(Polynomial, RejectsInhomogeneous) {
  RationalField f(Valuation::trivial());
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  EXPECT_THROW(poly(ring, {{1, {2, 0}}, {1, {0, 1}}}), DegreeMismatch);
}

TEST(Monomials, Enumeration) {
  auto m = monomials_of_degree(2, 2);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0], (Monomial{2, 0}));
  EXPECT_EQ(m[1], (Monomial{1, 1}));
  EXPECT_EQ(m[2], (Monomial{0, 2}));
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(monomials_of_degree(3, 4).size(), 15u);
  int brute = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) ++brute;
  EXPECT_EQ(brute, 15);
}

TEST(Monomials, DivisionAndLcm) {
  Monomial a{1, 2, 0}, b{2, 2, 1};
  EXPECT_TRUE(a.divides(b));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(a.quotient_of(b), (Monomial{1, 0, 1}));
  EXPECT_EQ(lcm(Monomial{2, 0, 0}, Monomial{1, 1, 0}), (Monomial{2, 1, 0}));
}
