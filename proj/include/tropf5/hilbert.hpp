#pragma once

// Numerator of the Hilbert series of a monomial ideal: HS(A/M) = N(t)/(1-t)^n.
// Pivoting on variable powers (N(M) = N(M + <p>) + t^deg p · N(M : p)).

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "tropf5/poly.hpp"

namespace tropf5 {

namespace detail {

using Exps = std::vector<int>;
using Series = std::vector<long long>;

inline bool exps_divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline void minimalize(std::vector<Exps>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Exps& a, const Exps& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (exps_divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

inline void series_add(Series& a, const Series& b, std::size_t shift, long long sign) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

inline Series hilbert_numerator_rec(std::vector<Exps> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  const std::size_t n = gens.front().size();
  // Variable shared by the most generators.
  std::size_t best = n;
  std::size_t best_count = 1;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t c = 0;
    for (const auto& g : gens)
      if (g[v] > 0) ++c;
    if (c > best_count) {
      best_count = c;
      best = v;
    }
  }
  if (best == n) {
    // Pairwise coprime: prod (1 - t^deg g).
    Series s{1};
    for (const auto& g : gens) {
      int d = 0;
      for (int e : g) d += e;
      Series next = s;
      series_add(next, s, static_cast<std::size_t>(d), -1);
      s = std::move(next);
    }
    return s;
  }
  // Pivot x^k with k the smallest positive exponent of that variable.
  int k = 0;
  for (const auto& g : gens)
    if (g[best] > 0 && (k == 0 || g[best] < k)) k = g[best];
  std::vector<Exps> sum = gens;
  Exps p(n, 0);
  p[best] = k;
  sum.push_back(p);
  std::vector<Exps> colon = gens;
  for (auto& g : colon) g[best] = std::max(0, g[best] - k);
  Series out = hilbert_numerator_rec(std::move(sum));
  series_add(out, hilbert_numerator_rec(std::move(colon)), static_cast<std::size_t>(k), 1);
  return out;
}

}  // namespace detail

// Coefficients of N(t), trailing zeros removed.
inline std::vector<long long> hilbert_numerator(std::span<const Monomial> gens, std::size_t nvars) {
  std::vector<detail::Exps> g;
  for (const auto& m : gens) {
    detail::Exps e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = m[i];
    g.push_back(std::move(e));
  }
  auto s = detail::hilbert_numerator_rec(std::move(g));
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

}  // namespace tropf5
