#pragma once

// End-to-end pipeline on a parsed system: pick the coefficient field, run F5
// and/or the oracle, and collect a field-independent result.

#include <chrono>
#include <ctime>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tropf5/f5.hpp"
#include "tropf5/oracle.hpp"
#include "tropf5/system.hpp"

namespace tropf5 {

struct RunConfig {
  bool verify = false;
  bool oracle_only = false;
  bool rewriting = false;
  bool check_invariants = false;
  SignatureOrder signature_order = SignatureOrder::position_over_term;
  bool completeness_stop = true;
  int max_degree = 200;
  std::optional<int> oracle_bound;  // defaults to the Macaulay bound
  std::optional<double> timeout_seconds;
  std::ostream* matrix_dump = nullptr;
  std::function<void(const DegreeRecord&)> on_degree;
};

struct BasisLine {
  int index = 0;  // signature index, 0 for the zero signature
  std::string signature;
  std::string leading_monomial;
  std::string polynomial;
  int degree = 0;
};

struct PhaseTime {
  double cpu = 0;
  double wall = 0;
};

struct LossSummary {
  std::size_t count = 0;
  double mean = 0;
  long long max = 0;
  std::vector<long long> losses;  // one per output coefficient
};

struct RunResult {
  SystemFile system;  // homogenized
  bool f5_ran = false;
  std::vector<BasisLine> basis;
  F5Stats stats;
  std::optional<LossSummary> loss;  // capped mode only
  bool oracle_ran = false;
  int oracle_bound = 0;
  std::vector<std::size_t> oracle_dims;
  std::vector<std::vector<std::string>> oracle_leading;  // per degree
  std::optional<VerifyReport> verify;
  std::vector<std::string> uncovered;  // "degree: monomial"
  std::optional<bool> regular;         // Hilbert-series check, when s <= n
  PhaseTime f5_time;
  PhaseTime oracle_time;
};

namespace detail {

struct Stopwatch {
  std::clock_t c0 = std::clock();
  std::chrono::steady_clock::time_point w0 = std::chrono::steady_clock::now();
  PhaseTime elapsed() const {
    return {static_cast<double>(std::clock() - c0) / CLOCKS_PER_SEC,
            std::chrono::duration<double>(std::chrono::steady_clock::now() - w0).count()};
  }
};

template <class V>
LossSummary summarize_losses(const CappedPadicField& field, const std::vector<LabeledPoly<V>>& basis) {
  LossSummary s;
  for (const auto& g : basis)
    for (const auto& t : g.poly) {
      const long long m = precision_loss(field.default_precision(), t.coeff);
      s.losses.push_back(m);
      s.max = std::max(s.max, m);
    }
  s.count = s.losses.size();
  if (s.count) {
    long double sum = 0;
    for (auto m : s.losses) sum += m;
    s.mean = static_cast<double>(sum / s.count);
  }
  return s;
}

template <CoefficientField F>
RunResult run_in_field(const F& field, const SystemFile& sys, const RunConfig& cfg) {
  using V = typename F::value_type;
  RunResult out;
  out.system = sys;
  PolyRing<F> ring(field, system_order(sys), sys.vars);
  const auto gens = system_polynomials(ring, sys);
  const std::span<const Polynomial<V>> gspan(gens);

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (cfg.timeout_seconds)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(*cfg.timeout_seconds));

  std::vector<Polynomial<V>> basis_polys;
  if (!cfg.oracle_only) {
    F5Options opts;
    opts.rewriting = cfg.rewriting;
    opts.signature_order = cfg.signature_order;
    opts.completeness_stop = cfg.completeness_stop;
    opts.max_degree = cfg.max_degree;
    opts.check_invariants = cfg.check_invariants;
    opts.deadline = deadline;
    opts.matrix_dump = cfg.matrix_dump;
    opts.on_degree = cfg.on_degree;
    Stopwatch sw;
    auto st = f5_incremental(ring, gspan, opts);
    out.f5_time = sw.elapsed();
    out.f5_ran = true;
    out.stats = st.stats;

    const SignOrder ord = sign_order(ring, st);
    std::vector<std::size_t> idx(st.basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const auto c = ord.compare(st.basis[a].sig, st.basis[b].sig);
      if (c != 0) return c < 0;
      return ring.order().compare_monomials(st.basis[a].poly.leading_monomial(),
                                            st.basis[b].poly.leading_monomial()) < 0;
    });
    for (auto i : idx) {
      const auto& g = st.basis[i];
      out.basis.push_back({g.sig.index, signature_to_string(g.sig, ring),
                           ring.monomial_to_string(g.poly.leading_monomial()), ring.to_string(g.poly),
                           g.poly.degree()});
      basis_polys.push_back(g.poly);
    }
    if constexpr (F::is_capped) out.loss = summarize_losses(field, st.basis);
  }

  if (cfg.verify || cfg.oracle_only) {
    out.oracle_bound = cfg.oracle_bound ? *cfg.oracle_bound : macaulay_bound(gspan);
    Stopwatch sw;
    auto t = oracle_gb(ring, gspan, out.oracle_bound, deadline);
    out.oracle_time = sw.elapsed();
    out.oracle_ran = true;
    out.oracle_dims = t.hilbert();
    for (const auto& d : t.degrees) {
      std::vector<std::string> lms;
      for (const auto& m : d.leading) lms.push_back(ring.monomial_to_string(m));
      out.oracle_leading.push_back(std::move(lms));
    }
    if (gens.size() <= ring.nvars()) {
      std::vector<int> degs;
      for (const auto& g : gens) degs.push_back(g.degree());
      out.regular = regularity_check(static_cast<int>(ring.nvars()), degs, t);
    }
    if (out.f5_ran) {
      out.verify = verify_gb(std::span<const Polynomial<V>>(basis_polys), t);
      for (const auto& v : out.verify->uncovered)
        out.uncovered.push_back(std::to_string(v.degree) + ": " + ring.monomial_to_string(v.monomial));
    }
  }
  return out;
}

}  // namespace detail

// `sys` may still carry the homogenize flag; it is applied here.
inline RunResult run_system(const SystemFile& input, const RunConfig& cfg) {
  const SystemFile sys = homogenized(input);
  for (std::size_t i = 0; i < sys.polys.size(); ++i)
    if (!is_homogeneous(sys.polys[i]))
      throw InhomogeneousError("polynomial " + std::to_string(i + 1) + " is not homogeneous");
  if (sys.field.precision) {
    CappedPadicField field(static_cast<std::uint64_t>(*sys.field.prime), *sys.field.precision);
    return detail::run_in_field(field, sys, cfg);
  }
  if (sys.field.prime) return detail::run_in_field(RationalField(Valuation::padic(*sys.field.prime)), sys, cfg);
  return detail::run_in_field(RationalField(Valuation::trivial()), sys, cfg);
}

}  // namespace tropf5
