#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tropf5/benchmarks.hpp"
#include "tropf5/run.hpp"
#include "tropf5/system.hpp"

using namespace tropf5;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(TROPF5_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Parse, OneLine) {
  auto sys = parse_system("vars x,y; field QQ p=2; w 0,0; polys: x+y;");
  EXPECT_EQ(sys.vars.size(), 2u);
  ASSERT_EQ(sys.polys.size(), 1u);
  EXPECT_EQ(sys.field.prime, 2);
  EXPECT_FALSE(sys.field.precision);
}

TEST(Parse, RationalsPowersAndComments) {
  auto sys = parse_system(
      "# header\n"
      "vars a,b,c;\n"
      "field QQ p=3 N=20;\n"
      "weight 1/2,-1,0;\n"
      "tiebreak lex;\n"
      "polys:\n"
      "  2/3*a^2 - b*c + c^2,  # trailing\n"
      "  a*b*c - 5*c^3;\n");
  ASSERT_EQ(sys.polys.size(), 2u);
  EXPECT_EQ(sys.field.precision, 20);
  EXPECT_EQ(sys.tiebreak, Tiebreak::lex);
  EXPECT_EQ(sys.weight[0], mpq_class(1, 2));
  EXPECT_EQ(sys.polys[0][0].coeff, mpq_class(2, 3));
  EXPECT_EQ(sys.polys[0][0].exps, (std::vector<int>{2, 0, 0}));
}

TEST(Parse, MalformedReportsPosition) {
  try {
    parse_system("vars x,y;\npolys:\n  x+;\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(parse_system("x+"), ParseError);
  EXPECT_THROW(parse_system("vars x; polys: y;"), ParseError);
}

TEST(Parse, Inhomogeneous) {
  EXPECT_THROW(parse_system("vars x,y; polys: x^2 + y;"), InhomogeneousError);
  auto sys = parse_system("vars x,y; homogenize h; polys: x^2 + y;");
  auto h = homogenized(sys);
  EXPECT_EQ(h.vars.back(), "h");
  EXPECT_EQ(h.polys[0][1].exps, (std::vector<int>{0, 1, 1}));
}

TEST(Parse, WeightLengthChecked) { EXPECT_THROW(parse_system("vars x,y; weight 1; polys: x;"), ParseError); }

TEST(Fixtures, Katsura3RoundTrip) {
  auto sys = parse_system(read_data("katsura3.sys"));
  EXPECT_EQ(sys.polys.size(), 4u);
  EXPECT_EQ(homogenized(sys).vars.size(), 5u);
  EXPECT_EQ(sys, named_system("katsura3"));
}

TEST(Fixtures, AllMatchGenerators) {
  for (const char* name : {"katsura3", "katsura4", "katsura5", "cyclic4", "cyclic5"})
    EXPECT_EQ(parse_system(read_data(std::string(name) + ".sys")), named_system(name)) << name;
}

TEST(Print, RoundTrip) {
  for (const char* text : {"vars x,y; field QQ p=2; w 0,0; polys: x+y;",
                           "vars a,b; field QQ p=5 N=9; weight -1/3,2; tiebreak lex; polys: 3/7*a^2 - b^2, a*b;",
                           "vars u,v,w; homogenize t; polys: u*v - w, u^3 + 1;"}) {
    auto sys = parse_system(text);
    EXPECT_EQ(parse_system(print_system(sys)), sys) << text;
  }
}

TEST(Run, Katsura3Verifies) {
  RunConfig cfg;
  cfg.verify = true;
  auto r = run_system(named_system("katsura3"), cfg);
  ASSERT_TRUE(r.verify);
  EXPECT_TRUE(r.verify->passed());
  EXPECT_EQ(r.stats.zero_reductions, 0u);
  // Sorted by signature.
  for (std::size_t i = 1; i < r.basis.size(); ++i) EXPECT_LE(r.basis[i - 1].index, r.basis[i].index);
}

TEST(Run, CappedModeReportsLoss) {
  auto sys = parse_system("vars x,y,z; field QQ p=2 N=30; polys: x^2 + 3*y*z, y^2 - 2*x*z, z^2 + x*y;");
  auto r = run_system(sys, RunConfig{});
  ASSERT_TRUE(r.loss);
  EXPECT_GT(r.loss->count, 0u);
  EXPECT_EQ(r.loss->losses.size(), r.loss->count);
}

TEST(Run, OracleOnly) {
  RunConfig cfg;
  cfg.oracle_only = true;
  auto r = run_system(named_system("cyclic4"), cfg);
  EXPECT_FALSE(r.f5_ran);
  EXPECT_TRUE(r.oracle_ran);
}

TEST(Bench, EmptySuite) {
  EXPECT_TRUE(bench_suite("empty").empty());
  EXPECT_TRUE(run_bench({}, SystemFile{}, RunConfig{}).empty());
}

TEST(PrecisionExperiment, SeedReproducible) {
  PrecisionConfig cfg;
  cfg.p = 3;
  cfg.reps = 3;
  cfg.max_degree = 3;
  cfg.seed = 5;
  auto a = precision_experiment(cfg);
  auto b = precision_experiment(cfg);
  ASSERT_EQ(a.buckets.size(), b.buckets.size());
  for (std::size_t i = 0; i < a.buckets.size(); ++i) {
    EXPECT_EQ(a.buckets[i].coefficients, b.buckets[i].coefficients);
    EXPECT_EQ(a.buckets[i].mean, b.buckets[i].mean);
    EXPECT_EQ(a.buckets[i].max, b.buckets[i].max);
  }
}

TEST(PrecisionExperiment, LargePrimeIsLossless) {
  PrecisionConfig cfg;
  cfg.p = 65519;
  cfg.reps = 5;
  cfg.max_degree = 3;
  auto r = precision_experiment(cfg);
  for (const auto& b : r.buckets) {
    EXPECT_EQ(b.max, 0);
    EXPECT_EQ(b.failures, 0);
  }
}
