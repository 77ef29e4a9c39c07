#include <gtest/gtest.h>

#include <random>

#include "tropf5/benchmarks.hpp"
#include "tropf5/oracle.hpp"

using namespace tropf5;

TEST(Oracle, PrincipalIdeal) {
  RationalField f(Valuation::trivial());
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  std::vector<Polynomial<mpq_class>> gens{ring.from_rational_terms({{1, {1, 0}}})};
  auto t = oracle_gb(ring, std::span<const Polynomial<mpq_class>>(gens), 2);
  EXPECT_EQ(t.degrees[1].dim, 1u);
  EXPECT_EQ(t.degrees[2].dim, 2u);
  EXPECT_EQ(t.degrees[1].leading, (std::vector<Monomial>{{1, 0}}));
  auto lm2 = t.degrees[2].leading;
  std::sort(lm2.begin(), lm2.end(), [](const Monomial& a, const Monomial& b) { return compare_tiebreak(Tiebreak::lex, a, b) > 0; });
  EXPECT_EQ(lm2, (std::vector<Monomial>{{2, 0}, {1, 1}}));
}

TEST(Oracle, QuadricDimensions) {
  RationalField f(Valuation::trivial());
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  std::vector<Polynomial<mpq_class>> gens{ring.from_rational_terms({{1, {2, 0}}}),
                                          ring.from_rational_terms({{1, {1, 1}}, {1, {0, 2}}})};
  auto t = oracle_gb(ring, std::span<const Polynomial<mpq_class>>(gens), 3);
  EXPECT_EQ(t.degrees[2].dim, 2u);
  EXPECT_EQ(t.degrees[3].dim, 4u);
  EXPECT_EQ(t.hilbert(), (std::vector<std::size_t>{0, 0, 2, 4}));
}

TEST(Verify, SelfConsistent) {
  RationalField f(Valuation::padic(3));
  PolyRing<RationalField> ring(f, TropicalOrder({1, 0, 2}, Tiebreak::grevlex), {"x", "y", "z"});
  std::mt19937_64 rng(1);
  std::vector<Polynomial<mpq_class>> gens{random_dense(ring, 2, rng, 3, 4), random_dense(ring, 3, rng, 3, 4)};
  auto t = oracle_gb(ring, std::span<const Polynomial<mpq_class>>(gens), 5);
  std::vector<Polynomial<mpq_class>> rows;
  for (const auto& d : t.degrees) rows.insert(rows.end(), d.echelon.begin(), d.echelon.end());
  EXPECT_TRUE(verify_gb(std::span<const Polynomial<mpq_class>>(rows), t).passed());
}

TEST(Verify, ReportsUncoveredMonomial) {
  RationalField f(Valuation::trivial());
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  std::vector<Polynomial<mpq_class>> gens{ring.from_rational_terms({{1, {1, 0}}}),
                                          ring.from_rational_terms({{1, {0, 2}}})};
  auto t = oracle_gb(ring, std::span<const Polynomial<mpq_class>>(gens), 3);
  std::vector<Polynomial<mpq_class>> partial{gens[0]};
  auto rep = verify_gb(std::span<const Polynomial<mpq_class>>(partial), t);
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(rep.uncovered.front().degree, 2);
  EXPECT_EQ(rep.uncovered.front().monomial, (Monomial{0, 2}));
}

TEST(Oracle, DimensionsIgnoreWeightAndLeadingMonomialsAreMonotone) {
  std::mt19937_64 rng(6);
  RationalField f(Valuation::padic(2));
  PolyRing<RationalField> r0(f, TropicalOrder::zero_weight(3), {"x", "y", "z"});
  std::vector<Polynomial<mpq_class>> gens{random_dense(r0, 2, rng, 2, 5), random_dense(r0, 2, rng, 2, 5),
                                          random_dense(r0, 3, rng, 2, 5)};
  PolyRing<RationalField> r1(f, TropicalOrder({1, -3, 2}, Tiebreak::lex), {"x", "y", "z"});
  std::vector<Polynomial<mpq_class>> gens1;
  for (const auto& g : gens) {
    std::vector<std::pair<mpq_class, Monomial>> ts;
    for (const auto& t : g) ts.emplace_back(t.coeff, t.mon);
    gens1.push_back(r1.from_rational_terms(ts));
  }
  auto t0 = oracle_gb(r0, std::span<const Polynomial<mpq_class>>(gens), 5);
  auto t1 = oracle_gb(r1, std::span<const Polynomial<mpq_class>>(gens1), 5);
  EXPECT_EQ(t0.hilbert(), t1.hilbert());
  for (const auto* t : {&t0, &t1})
    for (int d = 0; d < 5; ++d)
      for (const auto& m : t->degrees[d].leading)
        for (std::size_t v = 0; v < 3; ++v) {
          const Monomial up = m * Monomial::variable(3, v);
          const auto& next = t->degrees[d + 1].leading;
          EXPECT_NE(std::find(next.begin(), next.end(), up), next.end());
        }
}

TEST(Regularity, Examples) {
  RationalField f(Valuation::trivial());
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  std::vector<Polynomial<mpq_class>> coords{ring.from_rational_terms({{1, {1, 0}}}),
                                            ring.from_rational_terms({{1, {0, 1}}})};
  EXPECT_TRUE(regularity_check(ring, std::span<const Polynomial<mpq_class>>(coords), 3));
  std::vector<Polynomial<mpq_class>> twice{ring.from_rational_terms({{1, {2, 0}}}),
                                           ring.from_rational_terms({{1, {2, 0}}})};
  EXPECT_FALSE(regularity_check(ring, std::span<const Polynomial<mpq_class>>(twice), 2));

  PolyRing<RationalField> r3(f, TropicalOrder::zero_weight(3), {"x", "y", "z"});
  std::mt19937_64 rng(3);
  std::vector<Polynomial<mpq_class>> dense{random_dense(r3, 2, rng, 7, 3), random_dense(r3, 2, rng, 7, 3),
                                           random_dense(r3, 2, rng, 7, 3)};
  auto sp = std::span<const Polynomial<mpq_class>>(dense);
  EXPECT_TRUE(regularity_check(r3, sp, macaulay_bound(sp)));
}

TEST(Oracle, MacaulayBound) {
  RationalField f(Valuation::trivial());
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(3), {"x", "y", "z"});
  std::mt19937_64 rng(0);
  std::vector<Polynomial<mpq_class>> g{random_dense(ring, 2, rng, 5, 2), random_dense(ring, 3, rng, 5, 2),
                                       random_dense(ring, 4, rng, 5, 2)};
  EXPECT_EQ(macaulay_bound(std::span<const Polynomial<mpq_class>>(g)), 7);
}

TEST(HilbertSeries, RegularSequence) {
  // (1 - t^2)^3 / (1 - t)^3 = (1 + t)^3
  const std::vector<int> degs{2, 2, 2};
  EXPECT_EQ(regular_hilbert_series(3, degs, 4), (std::vector<long long>{1, 3, 3, 1, 0}));
}
