#include <gtest/gtest.h>

#include <random>

#include "tropf5/benchmarks.hpp"
#include "tropf5/f5.hpp"
#include "tropf5/oracle.hpp"

using namespace tropf5;

namespace {

RationalField trivial_field() { return RationalField(Valuation::trivial()); }

template <class V>
BasisState<V> seeded_state(std::span<const Polynomial<V>> gens) {
  BasisState<V> st;
  st.generator_degrees.push_back(0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    st.generator_degrees.push_back(gens[i].degree());
    st.pending.emplace_back(static_cast<int>(i + 1), gens[i]);
  }
  return st;
}

template <class V>
std::vector<Polynomial<V>> polys_of(const BasisState<V>& st) {
  std::vector<Polynomial<V>> out;
  for (const auto& g : st.basis) out.push_back(g.poly);
  return out;
}

}  // namespace

TEST(SPair, QuadricPair) {
  auto f = trivial_field();
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  BasisState<mpq_class> st;
  st.basis.push_back({ring.from_rational_terms({{1, {2, 0}}}), Signature::of(1, Monomial(2)), true});
  st.basis.push_back({ring.from_rational_terms({{1, {1, 1}}, {1, {0, 2}}}), Signature::of(2, Monomial(2)), true});
  auto r = spair(ring, st, 0, 1);
  ASSERT_TRUE(std::holds_alternative<Pair>(r));
  const auto& p = std::get<Pair>(r);
  EXPECT_EQ(p.lcm, (Monomial{2, 1}));
  EXPECT_EQ(p.u1, (Monomial{0, 1}));
  EXPECT_EQ(p.u2, (Monomial{1, 0}));
  EXPECT_EQ(p.guessed_sig, Signature::of(2, Monomial{1, 0}));
  auto spol = ring.sub(ring.mul_monomial(p.u1, st.basis[0].poly), ring.mul_monomial(p.u2, st.basis[1].poly));
  EXPECT_EQ(ring.to_string(spol), ring.to_string(ring.from_rational_terms({{-1, {1, 2}}})));
}

TEST(SPair, Rejections) {
  auto f = trivial_field();
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  BasisState<mpq_class> st;
  auto g = ring.from_rational_terms({{1, {2, 0}}});
  st.basis.push_back({g, Signature::of(1, Monomial(2)), true});
  st.basis.push_back({g, Signature::of(1, Monomial(2)), true});
  EXPECT_EQ(std::get<PairRejection>(spair(ring, st, 0, 1)), PairRejection::equal_signatures);
  st.basis[0].sig = st.basis[1].sig = Signature::zero();
  EXPECT_EQ(std::get<PairRejection>(spair(ring, st, 0, 1)), PairRejection::both_in_ideal);
  // x²·e_2 with x² ∈ LM(I_1).
  st.basis[0] = {g, Signature::zero(), true};
  st.basis[1] = {ring.from_rational_terms({{1, {0, 2}}}), Signature::of(2, Monomial(2)), true};
  st.syzygies.add(1, Monomial{2, 0});
  EXPECT_EQ(std::get<PairRejection>(spair(ring, st, 0, 1)), PairRejection::f5_criterion);
}

TEST(Termination, Monitor) {
  BasisState<mpq_class> st;
  EXPECT_EQ(termination_monitor(st, 10), Progress::Done);
  st.queue[4].push_back(Pair{});
  EXPECT_EQ(termination_monitor(st, 10), Progress::Continue);
  EXPECT_THROW(termination_monitor(st, 3), MaxDegreeExceeded);
}

TEST(F5Step, EmptyDegreeAdvances) {
  auto f = trivial_field();
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  BasisState<mpq_class> st;
  st.degree = 3;
  f5_step(ring, st, 3);
  EXPECT_EQ(st.degree, 4);
  EXPECT_TRUE(st.basis.empty());
}

TEST(F5, PrincipalIdeal) {
  auto f = trivial_field();
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(1), {"x"});
  std::vector<Polynomial<mpq_class>> gens{ring.from_rational_terms({{1, {1}}})};
  auto st = f5_incremental(ring, std::span<const Polynomial<mpq_class>>(gens));
  ASSERT_EQ(st.basis.size(), 1u);
  EXPECT_EQ(st.basis[0].poly.leading_monomial(), (Monomial{1}));
  EXPECT_EQ(st.basis[0].sig, Signature::of(1, Monomial(1)));
}

TEST(F5, QuadricsAgainstOracle) {
  auto f = trivial_field();
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  std::vector<Polynomial<mpq_class>> gens{ring.from_rational_terms({{1, {2, 0}}}),
                                          ring.from_rational_terms({{1, {1, 1}}, {1, {0, 2}}})};
  auto sp = std::span<const Polynomial<mpq_class>>(gens);
  auto st = f5_incremental(ring, sp);
  auto b = polys_of(st);
  auto rep = verify_gb(std::span<const Polynomial<mpq_class>>(b), oracle_gb(ring, sp, 6));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(st.stats.zero_reductions, 0u);
}

TEST(F5, ZeroGeneratorRejected) {
  auto f = trivial_field();
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  std::vector<Polynomial<mpq_class>> gens{ring.from_rational_terms({{1, {2, 0}}}), Polynomial<mpq_class>{}};
  EXPECT_THROW(f5_incremental(ring, std::span<const Polynomial<mpq_class>>(gens)), std::invalid_argument);
  EXPECT_THROW(f5_incremental(ring, std::span<const Polynomial<mpq_class>>()), EmptyInput);
}

TEST(F5Extend, GeneratorInBaseIdeal) {
  auto f = trivial_field();
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  std::vector<Polynomial<mpq_class>> base{ring.from_rational_terms({{1, {1, 0}}})};
  auto f1 = ring.from_rational_terms({{1, {1, 1}}});
  auto st = f5_extend(ring, std::span<const Polynomial<mpq_class>>(base), f1);
  EXPECT_EQ(st.basis.size(), 1u);
  ASSERT_EQ(st.stats.notices.size(), 1u);
}

TEST(F5Extend, MatchesIncremental) {
  RationalField f(Valuation::padic(3));
  PolyRing<RationalField> ring(f, TropicalOrder({1, 0, -1}, Tiebreak::grevlex), {"x", "y", "z"});
  std::mt19937_64 rng(8);
  std::vector<Polynomial<mpq_class>> gens{random_dense(ring, 2, rng, 3, 4), random_dense(ring, 2, rng, 3, 4)};
  auto base = f5_incremental(ring, std::span<const Polynomial<mpq_class>>(gens.data(), 1));
  auto bp = polys_of(base);
  auto st = f5_extend(ring, std::span<const Polynomial<mpq_class>>(bp), gens[1]);
  auto b = polys_of(st);
  auto sp = std::span<const Polynomial<mpq_class>>(gens);
  EXPECT_TRUE(verify_gb(std::span<const Polynomial<mpq_class>>(b), oracle_gb(ring, sp, 6)).passed());
  EXPECT_EQ(st.stats.zero_reductions, 0u);
}

// The first degree of homogenized Katsura-3 with pairs: rows strictly
// increasing by signature and one row per reducible monomial.
TEST(SymbolicPreprocessing, Katsura3Structure) {
  auto f = trivial_field();
  auto sys = homogenized(katsura(3));
  PolyRing<RationalField> ring(f, system_order(sys), sys.vars);
  auto gens = system_polynomials(ring, sys);
  ASSERT_EQ(gens.size(), 4u);
  ASSERT_EQ(ring.nvars(), 5u);
  auto st = seeded_state(std::span<const Polynomial<mpq_class>>(gens));
  bool checked = false;
  while (!checked) {
    const int d = *next_degree(st);
    auto it = st.queue.find(d);
    if (it != st.queue.end() && !it->second.empty()) {
      const SignOrder ord = sign_order(ring, st);
      std::vector<RowSource<mpq_class>> sources;
      std::size_t seq = 0;
      for (const auto& p : it->second) {
        sources.push_back(detail::make_source<RationalField>(ord, st.basis[p.g1].poly, p.u1, p.sig1, seq++));
        sources.push_back(detail::make_source<RationalField>(ord, st.basis[p.g2].poly, p.u2, p.sig2, seq++));
      }
      const std::size_t pair_rows = sources.size();
      auto pre = symbolic_preprocessing(ring, st, sources, d);
      ASSERT_GT(pre.matrix.nrows(), 0u);
      for (std::size_t i = 1; i < pre.rows.size(); ++i) {
        const auto& a = pre.rows[i - 1];
        const auto& b = pre.rows[i];
        if (a.sig.is_zero() && b.sig.is_zero()) continue;
        EXPECT_TRUE((ord.compare(a.sig, a.in_syzygy_set, b.sig, b.in_syzygy_set)) < 0);
      }
      std::vector<Monomial> reductor_lms;
      for (const auto& r : pre.rows)
        if (r.seq >= pair_rows) reductor_lms.push_back(r.lm);
      for (std::size_t i = 0; i < reductor_lms.size(); ++i)
        for (std::size_t j = i + 1; j < reductor_lms.size(); ++j) EXPECT_NE(reductor_lms[i], reductor_lms[j]);
      for (const auto& m : pre.matrix.columns) {
        bool reducible = false;
        for (const auto& g : st.basis) {
          const Monomial& lm = g.poly.leading_monomial();
          if (lm.divides(m) && !ord.in_syzygy_set(guessed_sig_of_multiple(lm.quotient_of(m), g.sig))) reducible = true;
        }
        if (!reducible) continue;
        std::size_t rows_with_lm = 0;
        for (const auto& r : pre.rows)
          if (r.lm == m) ++rows_with_lm;
        EXPECT_GE(rows_with_lm, 1u) << ring.monomial_to_string(m);
      }
      checked = true;
    }
    f5_step(ring, st, d);
  }
}

TEST(F5, InvariantsHoldThroughout) {
  RationalField f(Valuation::padic(2));
  PolyRing<RationalField> ring(f, TropicalOrder({0, 1, -1}, Tiebreak::grevlex), {"x", "y", "z"});
  std::mt19937_64 rng(12);
  std::vector<Polynomial<mpq_class>> gens{random_dense(ring, 2, rng, 2, 6), random_dense(ring, 3, rng, 2, 6),
                                          random_dense(ring, 3, rng, 2, 6)};
  F5Options opts;
  opts.check_invariants = true;
  EXPECT_NO_THROW(f5_incremental(ring, std::span<const Polynomial<mpq_class>>(gens), opts));
}

TEST(F5, RewritingGivesTheSameLeadingMonomials) {
  RationalField f(Valuation::padic(3));
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(3), {"x", "y", "z"});
  std::mt19937_64 rng(21);
  std::vector<Polynomial<mpq_class>> gens{random_dense(ring, 2, rng, 3, 5), random_dense(ring, 2, rng, 3, 5),
                                          random_dense(ring, 3, rng, 3, 5)};
  auto sp = std::span<const Polynomial<mpq_class>>(gens);
  F5Options with;
  with.rewriting = true;
  auto a = polys_of(f5_incremental(ring, sp));
  auto b = polys_of(f5_incremental(ring, sp, with));
  auto t = oracle_gb(ring, sp, macaulay_bound(sp));
  EXPECT_TRUE(verify_gb(std::span<const Polynomial<mpq_class>>(a), t).passed());
  EXPECT_TRUE(verify_gb(std::span<const Polynomial<mpq_class>>(b), t).passed());
}

TEST(F5, CompletenessStopNotice) {
  RationalField f(Valuation::padic(2));
  PolyRing<RationalField> ring(f, TropicalOrder({1, -3, 2}, Tiebreak::grevlex), {"x", "y", "z"});
  std::mt19937_64 rng(30);
  // Two quadrics: positive-dimensional, so only the Hilbert-series test can end the run early.
  std::vector<Polynomial<mpq_class>> gens{random_dense(ring, 2, rng, 2, 10), random_dense(ring, 2, rng, 2, 10)};
  auto sp = std::span<const Polynomial<mpq_class>>(gens);
  auto st = f5_incremental(ring, sp);
  auto b = polys_of(st);
  EXPECT_TRUE(verify_gb(std::span<const Polynomial<mpq_class>>(b), oracle_gb(ring, sp, 8)).passed());
  ASSERT_TRUE(st.reference_hilbert);
  EXPECT_EQ(leading_monomial_hilbert(st, 3), *st.reference_hilbert);
}

TEST(MinimalBasis, DropsMultiples) {
  auto f = trivial_field();
  PolyRing<RationalField> ring(f, TropicalOrder::zero_weight(2), {"x", "y"});
  std::vector<LabeledPoly<mpq_class>> b{{ring.from_rational_terms({{1, {1, 0}}}), Signature::of(1, Monomial(2)), true},
                                        {ring.from_rational_terms({{1, {2, 0}}}), Signature::of(2, Monomial(2)), true},
                                        {ring.from_rational_terms({{1, {0, 1}}}), Signature::of(2, Monomial(2)), true}};
  EXPECT_EQ(minimal_basis(b).size(), 2u);
}
