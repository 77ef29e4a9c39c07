#pragma once

// Brute-force truncated tropical GB: for every degree d <= D, the full
// Macaulay matrix of all monomial multiples of the generators, echelonized by
// tropical LUP.  No signatures are involved.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropf5/linalg.hpp"
#include "tropf5/poly.hpp"

namespace tropf5 {

template <class V>
struct OracleDegree {
  int degree = 0;
  std::vector<Polynomial<V>> echelon;  // leading monomials pairwise distinct
  std::vector<Monomial> leading;
  std::size_t dim = 0;                 // dim I_d
  std::size_t rows = 0;                // rows of Mac_d
  std::size_t cols = 0;                // monomials of degree d
};

template <class V>
struct TruncatedGB {
  int bound = 0;
  std::vector<OracleDegree<V>> degrees;  // degrees[d] for d = 0..bound

  std::vector<std::size_t> hilbert() const {
    std::vector<std::size_t> out;
    for (const auto& d : degrees) out.push_back(d.dim);
    return out;
  }
};

// Σ d_i − s + 1.
template <class V>
int macaulay_bound(std::span<const Polynomial<V>> gens) {
  int sum = 0;
  for (const auto& g : gens) sum += g.degree();
  return sum - static_cast<int>(gens.size()) + 1;
}

template <CoefficientField F>
OracleDegree<typename F::value_type> oracle_degree(const PolyRing<F>& ring,
                                                   std::span<const Polynomial<typename F::value_type>> gens, int d,
                                                   const std::optional<std::chrono::steady_clock::time_point>& deadline = {}) {
  using V = typename F::value_type;
  OracleDegree<V> out;
  out.degree = d;
  const auto columns = monomials_of_degree(ring.nvars(), d, ring.order().tiebreak());
  out.cols = columns.size();
  std::vector<std::pair<Signature, Polynomial<V>>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& t : monomials_of_degree(ring.nvars(), d - g.degree(), ring.order().tiebreak()))
      rows.emplace_back(Signature::zero(), ring.mul_monomial(t, g));
  }
  out.rows = rows.size();
  if (rows.empty()) return out;
  auto m = matrix_from_rows(ring, d, columns, std::span<const std::pair<Signature, Polynomial<V>>>(rows));
  LupOptions opts;
  opts.allow_precision_zero_rows = true;
  opts.deadline = deadline;
  auto res = tropical_lup(ring, std::move(m), opts);
  for (std::size_t i = 0; i < res.reduced.nrows(); ++i) {
    if (!res.row_pivot[i]) continue;
    out.echelon.push_back(row_polynomial(ring, res.reduced, i));
    out.leading.push_back(res.reduced.columns[*res.row_pivot[i]]);
  }
  out.dim = out.echelon.size();
  return out;
}

template <CoefficientField F>
TruncatedGB<typename F::value_type> oracle_gb(const PolyRing<F>& ring,
                                              std::span<const Polynomial<typename F::value_type>> gens, int bound,
                                              const std::optional<std::chrono::steady_clock::time_point>& deadline = {}) {
  TruncatedGB<typename F::value_type> out;
  out.bound = bound;
  for (int d = 0; d <= bound; ++d) out.degrees.push_back(oracle_degree(ring, gens, d, deadline));
  return out;
}

struct Violation {
  int degree = 0;
  Monomial monomial;
};

struct VerifyReport {
  int bound = 0;
  std::size_t checked = 0;
  std::vector<Violation> uncovered;

  bool passed() const { return uncovered.empty(); }
};

inline VerifyReport verify_leading_monomials(std::span<const Monomial> basis_lms,
                                             const std::vector<std::vector<Monomial>>& oracle_lms, int bound) {
  VerifyReport rep;
  rep.bound = bound;
  for (std::size_t d = 0; d < oracle_lms.size(); ++d) {
    for (const auto& m : oracle_lms[d]) {
      ++rep.checked;
      bool covered = false;
      for (const auto& lm : basis_lms)
        if (lm.divides(m)) {
          covered = true;
          break;
        }
      if (!covered) rep.uncovered.push_back({static_cast<int>(d), m});
    }
  }
  return rep;
}

// Every oracle leading monomial of degree <= D is divisible by some LM(g).
template <class V>
VerifyReport verify_gb(std::span<const Polynomial<V>> basis, const TruncatedGB<V>& t) {
  std::vector<Monomial> lms;
  for (const auto& g : basis)
    if (!g.is_zero()) lms.push_back(g.leading_monomial());
  std::vector<std::vector<Monomial>> levels;
  for (const auto& d : t.degrees) levels.push_back(d.leading);
  return verify_leading_monomials(lms, levels, t.bound);
}

// Coefficients of ∏(1 − z^{d_i}) / (1 − z)^n up to z^D: the Hilbert function
// of A/I for a regular sequence.
inline std::vector<long long> regular_hilbert_series(int nvars, std::span<const int> degrees, int bound) {
  std::vector<long long> num(static_cast<std::size_t>(bound) + 1, 0);
  num[0] = 1;
  for (int di : degrees) {
    for (int k = bound; k >= di; --k) num[k] -= num[k - di];
  }
  for (int v = 0; v < nvars; ++v)
    for (int k = 1; k <= bound; ++k) num[k] += num[k - 1];
  return num;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim A_d − dim I_d agrees with the regular-sequence series for all d <= D.
template <class V>
bool regularity_check(int nvars, std::span<const int> degrees, const TruncatedGB<V>& t) {
  if (degrees.size() > static_cast<std::size_t>(nvars)) return false;
  const auto series = regular_hilbert_series(nvars, degrees, t.bound);
  for (int d = 0; d <= t.bound; ++d) {
    const long long total = binomial(d + nvars - 1, nvars - 1);
    if (total - static_cast<long long>(t.degrees[d].dim) != series[d]) return false;
  }
  return true;
}

template <CoefficientField F>
bool regularity_check(const PolyRing<F>& ring, std::span<const Polynomial<typename F::value_type>> gens, int bound) {
  if (gens.size() > ring.nvars()) return false;
  std::vector<int> degs;
  for (const auto& g : gens) degs.push_back(g.degree());
  return regularity_check(static_cast<int>(ring.nvars()), degs, oracle_gb(ring, gens, bound));
}

}  // namespace tropf5
