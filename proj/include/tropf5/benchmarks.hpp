#pragma once

// Standard benchmark systems, the bench harness and the random-coefficient
// precision experiment.

#include <gmpxx.h>

#include <array>
#include <chrono>
#include <ctime>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tropf5/f5.hpp"
#include "tropf5/run.hpp"
#include "tropf5/system.hpp"

namespace tropf5 {

// Katsura-n: n+1 unknowns x0..xn, inhomogeneous (homogenize flag set).
inline SystemFile katsura(int n) {
  if (n < 1 || n + 2 > static_cast<int>(kMaxVars)) throw std::invalid_argument("katsura size out of range");
  SystemFile sys;
  const int nv = n + 1;
  for (int i = 0; i < nv; ++i) sys.vars.push_back("x" + std::to_string(i));
  sys.homogenize = true;
  auto quad = [nv](int a, int b) {
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    ++e[static_cast<std::size_t>(a)];
    ++e[static_cast<std::size_t>(b)];
    return e;
  };
  auto add = [](RationalPolynomial& f, const mpq_class& c, std::vector<int> e) {
    for (auto& t : f)
      if (t.exps == e) {
        t.coeff += c;
        return;
      }
    f.push_back({c, std::move(e)});
  };
  RationalPolynomial lin;
  for (int i = 0; i < nv; ++i) {
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    e[static_cast<std::size_t>(i)] = 1;
    lin.push_back({mpq_class(i == 0 ? 1 : 2), e});
  }
  lin.push_back({mpq_class(-1), std::vector<int>(static_cast<std::size_t>(nv), 0)});
  sys.polys.push_back(lin);
  for (int m = 0; m < n; ++m) {
    RationalPolynomial f;
    for (int l = -n; l <= n; ++l) {
      const int a = std::abs(l), b = std::abs(m - l);
      if (a > n || b > n) continue;
      add(f, 1, quad(a, b));
    }
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    e[static_cast<std::size_t>(m)] = 1;
    add(f, -1, e);
    std::erase_if(f, [](const RationalTerm& t) { return t.coeff == 0; });
    sys.polys.push_back(f);
  }
  return sys;
}

// Cyclic-n: elementary cyclic sums, last one x0...x_{n-1} - 1.
inline SystemFile cyclic(int n) {
  if (n < 2 || n + 1 > static_cast<int>(kMaxVars)) throw std::invalid_argument("cyclic size out of range");
  SystemFile sys;
  for (int i = 0; i < n; ++i) sys.vars.push_back("x" + std::to_string(i));
  sys.homogenize = true;
  for (int k = 1; k < n; ++k) {
    RationalPolynomial f;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < k; ++j) ++e[static_cast<std::size_t>((i + j) % n)];
      f.push_back({mpq_class(1), e});
    }
    sys.polys.push_back(f);
  }
  RationalPolynomial last;
  last.push_back({mpq_class(1), std::vector<int>(static_cast<std::size_t>(n), 1)});
  last.push_back({mpq_class(-1), std::vector<int>(static_cast<std::size_t>(n), 0)});
  sys.polys.push_back(last);
  return sys;
}

// "katsura3", "cyclic4", ...
inline SystemFile named_system(const std::string& name) {
  auto num = [&](std::size_t prefix) {
    const std::string rest = name.substr(prefix);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("unknown system '" + name + "'");
    return std::stoi(rest);
  };
  if (name.rfind("katsura", 0) == 0) return katsura(num(7));
  if (name.rfind("cyclic", 0) == 0) return cyclic(num(6));
  throw std::invalid_argument("unknown system '" + name + "'");
}

inline std::vector<std::string> bench_suite(const std::string& suite) {
  if (suite == "desk") return {"katsura3", "cyclic4"};
  if (suite == "standard") return {"katsura3", "katsura4", "katsura5", "cyclic4", "cyclic5"};
  if (suite == "stretch")
    return {"katsura3", "katsura4", "katsura5", "katsura6", "katsura7", "cyclic4", "cyclic5", "cyclic6"};
  if (suite == "empty" || suite.empty()) return {};
  std::vector<std::string> out;
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) {
      (void)named_system(item);
      out.push_back(item);
    }
  return out;
}

struct BenchRow {
  std::string name;
  std::size_t nvars = 0;
  std::size_t npolys = 0;
  std::string status;  // ok, timeout, max_degree, failed
  double cpu_seconds = 0;
  double wall_seconds = 0;
  std::size_t basis_size = 0;
  std::size_t zero_reductions = 0;
  std::optional<bool> verified;
  std::string message;
};

// Runs each system over QQ (valuation and weight as in `base`), recording
// timeouts instead of failing.
inline std::vector<BenchRow> run_bench(const std::vector<std::string>& names, const SystemFile& base,
                                       RunConfig cfg) {
  std::vector<BenchRow> rows;
  for (const auto& name : names) {
    SystemFile sys = named_system(name);
    sys.field = base.field;
    sys.tiebreak = base.tiebreak;
    if (!base.weight.empty()) {
      sys.weight = base.weight;
      sys.weight.resize(sys.vars.size() + 1, mpq_class(0));
    }
    BenchRow row;
    row.name = name;
    row.nvars = sys.vars.size() + 1;
    row.npolys = sys.polys.size();
    try {
      auto r = run_system(sys, cfg);
      row.status = "ok";
      row.cpu_seconds = r.f5_time.cpu + r.oracle_time.cpu;
      row.wall_seconds = r.f5_time.wall + r.oracle_time.wall;
      row.basis_size = r.basis.size();
      row.zero_reductions = r.stats.zero_reductions;
      if (r.verify) row.verified = r.verify->passed();
    } catch (const ResourceLimit& e) {
      row.status = "timeout";
      row.message = e.what();
    } catch (const MaxDegreeExceeded& e) {
      row.status = "max_degree";
      row.message = e.what();
    } catch (const Error& e) {
      row.status = "failed";
      row.message = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

// Uniform integer in [0, p^N) drawn digit by digit.
inline mpz_class random_padic_integer(std::mt19937_64& rng, unsigned long p, long N) {
  std::uniform_int_distribution<unsigned long> digit(0, p - 1);
  mpz_class z = 0;
  for (long k = 0; k < N; ++k) z = z * p + digit(rng);
  return z;
}

// Dense homogeneous polynomial of degree d with coefficients uniform mod p^N.
template <CoefficientField F>
Polynomial<typename F::value_type> random_dense(const PolyRing<F>& ring, int d, std::mt19937_64& rng,
                                                unsigned long p, long N) {
  std::vector<std::pair<mpq_class, Monomial>> ts;
  for (const auto& m : monomials_of_degree(ring.nvars(), d, ring.order().tiebreak()))
    ts.emplace_back(mpq_class(random_padic_integer(rng, p, N)), m);
  return ring.from_rational_terms(ts);
}

struct PrecisionConfig {
  unsigned long p = 2;
  std::vector<mpq_class> weight{0, 0, 0};
  int reps = 50;
  int min_degree = 2;
  int max_degree = 4;
  long precision = 50;
  std::uint64_t seed = 1;
  Tiebreak tiebreak = Tiebreak::grevlex;
};

struct PrecisionBucket {
  int bound = 0;  // D = d1 + d2 + d3 - 2
  int reps = 0;
  int failures = 0;  // runs aborted by PrecisionExhausted
  std::size_t zero_reductions = 0;
  std::size_t coefficients = 0;
  double mean = 0;
  long long max = 0;
  long double total = 0;
};

struct PrecisionResult {
  PrecisionConfig config;
  std::vector<PrecisionBucket> buckets;
  std::size_t coefficients = 0;
  double pooled_mean = 0;
};

inline std::vector<std::array<int, 3>> degree_triples(int lo, int hi) {
  std::vector<std::array<int, 3>> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b)
      for (int c = b; c <= hi; ++c) out.push_back({a, b, c});
  return out;
}

// Seed for one repetition; independent of p and w so that different weights
// see the same draws.
inline std::uint64_t repetition_seed(std::uint64_t seed, const std::array<int, 3>& degs, int rep) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(degs[0]), static_cast<std::uint32_t>(degs[1]),
                    static_cast<std::uint32_t>(degs[2]), static_cast<std::uint32_t>(rep)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

// Three random dense forms in Q_p[x,y,z].  Each bucket D gets `reps`
// repetitions spread round-robin over the degree triples with that D.
inline PrecisionResult precision_experiment(const PrecisionConfig& cfg) {
  if (cfg.weight.size() != 3) throw std::invalid_argument("precision experiment uses 3 variables");
  CappedPadicField field(cfg.p, cfg.precision);
  PolyRing<CappedPadicField> ring(field, TropicalOrder(cfg.weight, cfg.tiebreak), {"x", "y", "z"});
  PrecisionResult res;
  res.config = cfg;
  const auto triples = degree_triples(cfg.min_degree, cfg.max_degree);
  std::map<int, std::vector<std::array<int, 3>>> by_bound;
  for (const auto& t : triples) by_bound[t[0] + t[1] + t[2] - 2].push_back(t);
  long double pooled = 0;
  for (const auto& [bound, ts] : by_bound) {
    PrecisionBucket b;
    b.bound = bound;
    for (int rep = 0; rep < cfg.reps; ++rep) {
      const auto& degs = ts[static_cast<std::size_t>(rep) % ts.size()];
      std::mt19937_64 rng(repetition_seed(cfg.seed, degs, rep));
      std::vector<Polynomial<CappedPadic>> gens;
      for (int d : degs) gens.push_back(random_dense(ring, d, rng, cfg.p, cfg.precision));
      ++b.reps;
      try {
        // Rows cancelling to O(p^N) are kept as zero reductions rather than
        // aborting the repetition.
        F5Options opts;
        opts.allow_precision_zero_rows = true;
        auto st = f5_incremental(ring, std::span<const Polynomial<CappedPadic>>(gens), opts);
        b.zero_reductions += st.stats.zero_reductions;
        auto loss = detail::summarize_losses(field, st.basis);
        for (auto m : loss.losses) {
          b.total += m;
          b.max = std::max(b.max, m);
        }
        b.coefficients += loss.count;
      } catch (const PrecisionExhausted&) {
        ++b.failures;
      }
    }
    b.mean = b.coefficients ? static_cast<double>(b.total / b.coefficients) : 0.0;
    pooled += b.total;
    res.coefficients += b.coefficients;
    res.buckets.push_back(b);
  }
  res.pooled_mean = res.coefficients ? static_cast<double>(pooled / res.coefficients) : 0.0;
  return res;
}

}  // namespace tropf5
