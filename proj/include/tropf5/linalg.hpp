#pragma once

// Macaulay matrices and tropical LUP row echelonization.
//
// Rows are processed strictly in their given order (no row pivoting: rows are
// sorted by signature and eliminating row i may only use rows above it).  For
// each row the pivot is the column whose entry forms the tropically greatest
// term, so the first nonzero entry of a reduced row, read through the column
// permutation, is the leading term of the corresponding polynomial.

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tropf5/poly.hpp"
#include "tropf5/signature.hpp"

namespace tropf5 {

template <class V>
struct MacaulayRow {
  Signature sig;
  std::vector<V> coeffs;
};

template <class V>
struct MacaulayMatrix {
  int degree = 0;
  std::vector<Monomial> columns;  // decreasing tiebreak order
  std::vector<MacaulayRow<V>> rows;

  std::size_t nrows() const { return rows.size(); }
  std::size_t ncols() const { return columns.size(); }
};

enum class ColumnSet { full, support };

// Writes already-ordered rows in the given column basis.
template <CoefficientField F>
MacaulayMatrix<typename F::value_type> matrix_from_rows(
    const PolyRing<F>& ring, int degree, std::vector<Monomial> columns,
    std::span<const std::pair<Signature, Polynomial<typename F::value_type>>> rows) {
  MacaulayMatrix<typename F::value_type> m;
  m.degree = degree;
  m.columns = std::move(columns);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(m.columns.size() * 2);
  for (std::size_t j = 0; j < m.columns.size(); ++j) index.emplace(m.columns[j], j);
  m.rows.reserve(rows.size());
  for (const auto& [sig, poly] : rows) {
    if (!poly.is_zero() && poly.degree() != degree)
      throw DegreeMismatch("row of degree " + std::to_string(poly.degree()) + " in a degree " +
                           std::to_string(degree) + " Macaulay matrix");
    MacaulayRow<typename F::value_type> row{sig, std::vector<typename F::value_type>(m.columns.size(), ring.field().zero())};
    for (const auto& t : poly) {
      auto it = index.find(t.mon);
      if (it == index.end()) throw std::invalid_argument("row monomial missing from the column basis");
      row.coeffs[it->second] = t.coeff;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

// Monomials occurring in the given polynomials, sorted decreasingly by the
// tiebreak order.
template <class V>
std::vector<Monomial> support_columns(std::span<const Polynomial<V>* const> polys, Tiebreak t) {
  std::unordered_map<Monomial, bool, MonomialHash> seen;
  std::vector<Monomial> cols;
  for (const auto* p : polys)
    for (const auto& term : *p)
      if (seen.emplace(term.mon, true).second) cols.push_back(term.mon);
  std::sort(cols.begin(), cols.end(), [t](const Monomial& a, const Monomial& b) { return compare_tiebreak(t, a, b) > 0; });
  return cols;
}

// Mac_d of the given labeled polynomials: rows sorted by increasing
// signature, zero-signature rows first and allowed to repeat.
template <CoefficientField F>
MacaulayMatrix<typename F::value_type> build_macaulay(const PolyRing<F>& ring,
                                                      std::span<const LabeledPoly<typename F::value_type>> polys,
                                                      int d, const SignOrder& ord, ColumnSet cols = ColumnSet::full) {
  using V = typename F::value_type;
  std::vector<std::size_t> perm(polys.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    perm[i] = i;
    if (polys[i].poly.is_zero() || polys[i].poly.degree() != d)
      throw DegreeMismatch("build_macaulay: polynomial " + std::to_string(i) + " is not of degree " + std::to_string(d));
  }
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return ord.compare(polys[a].sig, polys[b].sig) < 0; });
  for (std::size_t k = 1; k < perm.size(); ++k) {
    const auto& a = polys[perm[k - 1]].sig;
    const auto& b = polys[perm[k]].sig;
    if (!a.is_zero() && ord.compare(a, b) == 0)
      throw DuplicateSignature("two rows share the signature e_" + std::to_string(a.index) + " * " +
                               ring.monomial_to_string(a.mon));
  }
  std::vector<Monomial> columns;
  if (cols == ColumnSet::full) {
    columns = monomials_of_degree(ring.nvars(), d, ring.order().tiebreak());
  } else {
    std::vector<const Polynomial<V>*> ps;
    for (const auto& p : polys) ps.push_back(&p.poly);
    columns = support_columns<V>(ps, ring.order().tiebreak());
  }
  std::vector<std::pair<Signature, Polynomial<V>>> rows;
  rows.reserve(perm.size());
  for (auto i : perm) rows.emplace_back(polys[i].sig, polys[i].poly);
  return matrix_from_rows(ring, d, std::move(columns), std::span<const std::pair<Signature, Polynomial<V>>>(rows));
}

struct LupOptions {
  // Record T with U = T·M (tests; quadratic memory in the row count).
  bool record_trace = false;
  // Capped mode: report rows that became indistinguishable from zero instead
  // of raising PrecisionExhausted.
  bool allow_precision_zero_rows = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct Pivot {
  std::size_t row;
  std::size_t column;  // original column index
};

template <class V>
struct EchelonResult {
  MacaulayMatrix<V> reduced;                    // U, columns in original order
  std::vector<std::size_t> column_permutation;  // echelon position -> original column
  std::vector<Pivot> pivots;                    // in row order
  std::vector<std::optional<std::size_t>> row_pivot;
  std::vector<std::size_t> zero_rows;
  std::vector<Signature> zero_row_signatures;
  std::vector<std::size_t> precision_zero_rows;  // capped mode, flagged
  std::size_t indistinguishable_entries = 0;     // capped mode, entries O(p^k) treated as zero
  std::vector<std::vector<V>> trace;
};

// Algorithm: for each row in order, eliminate the pivot columns of all
// previous rows, then pick the greatest term as pivot and normalize it to 1.
// This is the left-looking form of the right-looking recursion (identical
// arithmetic, so results match the recursive formulation bit for bit).
template <CoefficientField F>
EchelonResult<typename F::value_type> tropical_lup(const PolyRing<F>& ring, MacaulayMatrix<typename F::value_type> m,
                                                   const LupOptions& opts = {}) {
  using V = typename F::value_type;
  const F& field = ring.field();
  const std::size_t nrows = m.nrows();
  const std::size_t ncols = m.ncols();

  EchelonResult<V> res;
  res.column_permutation.resize(ncols);
  std::vector<std::size_t> position_of(ncols);
  for (std::size_t j = 0; j < ncols; ++j) res.column_permutation[j] = position_of[j] = j;
  res.row_pivot.assign(nrows, std::nullopt);
  if (opts.record_trace) {
    res.trace.assign(nrows, std::vector<V>(nrows, field.zero()));
    for (std::size_t i = 0; i < nrows; ++i) res.trace[i][i] = field.one();
  }

  // Nonzero non-pivot columns of each finished pivot row.
  std::vector<std::vector<std::size_t>> support(nrows);
  std::vector<std::size_t> pivot_rows;
  std::size_t next_position = 0;

  for (std::size_t i = 0; i < nrows; ++i) {
    if (opts.deadline && (i & 31) == 0 && std::chrono::steady_clock::now() > *opts.deadline)
      throw ResourceLimit("deadline exceeded during row reduction");
    auto& row = m.rows[i].coeffs;
    bool had_entries = false;
    for (const auto& c : row)
      if (!field.is_zero(c)) {
        had_entries = true;
        break;
      }
    if (had_entries) {
      for (std::size_t k : pivot_rows) {
        const std::size_t pc = *res.row_pivot[k];
        if (field.is_zero(row[pc])) continue;
        const V c = row[pc];
        const auto& prow = m.rows[k].coeffs;
        for (std::size_t j : support[k]) field.sub_mul(row[j], c, prow[j]);
        row[pc] = field.zero();
        if (opts.record_trace)
          for (std::size_t r = 0; r <= k; ++r)
            if (!field.is_zero(res.trace[k][r])) field.sub_mul(res.trace[i][r], c, res.trace[k][r]);
      }
    }

    std::optional<std::size_t> best;
    std::int64_t best_key = 0;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (field.is_zero(row[j])) {
        if constexpr (F::is_capped) {
          if (!row[j].is_exact_zero()) {
            ++res.indistinguishable_entries;
            row[j] = field.zero();
          }
        }
        continue;
      }
      const std::int64_t key = ring.order().weighted(field.val(row[j]).value(), m.columns[j]);
      if (!best || key < best_key ||
          (key == best_key && compare_tiebreak(ring.order().tiebreak(), m.columns[j], m.columns[*best]) > 0)) {
        best = j;
        best_key = key;
      }
    }

    if (!best) {
      if (F::is_capped && had_entries) {
        if (!opts.allow_precision_zero_rows)
          throw PrecisionExhausted("row " + std::to_string(i) + " became indistinguishable from zero");
        res.precision_zero_rows.push_back(i);
      }
      res.zero_rows.push_back(i);
      res.zero_row_signatures.push_back(m.rows[i].sig);
      continue;
    }

    const std::size_t pc = *best;
    const V pivot = row[pc];
    auto& sup = support[i];
    for (std::size_t j = 0; j < ncols; ++j) {
      if (field.is_zero(row[j])) continue;
      row[j] = field.div(row[j], pivot);
      if (j != pc) sup.push_back(j);
    }
    if (opts.record_trace)
      for (std::size_t r = 0; r <= i; ++r)
        if (!field.is_zero(res.trace[i][r])) res.trace[i][r] = field.div(res.trace[i][r], pivot);

    // Swap the pivot column into the next echelon position.
    const std::size_t pos = position_of[pc];
    const std::size_t other = res.column_permutation[next_position];
    std::swap(res.column_permutation[pos], res.column_permutation[next_position]);
    position_of[other] = pos;
    position_of[pc] = next_position;
    ++next_position;

    res.row_pivot[i] = pc;
    res.pivots.push_back({i, pc});
    pivot_rows.push_back(i);
  }

  res.reduced = std::move(m);
  return res;
}

template <class V>
struct ReadOffRows {
  std::vector<LabeledPoly<V>> polys;  // nonzero rows, in row order
  std::vector<std::size_t> source_rows;
  std::vector<Signature> zero_rows;
};

template <CoefficientField F>
Polynomial<typename F::value_type> row_polynomial(const PolyRing<F>& ring,
                                                  const MacaulayMatrix<typename F::value_type>& m, std::size_t i) {
  std::vector<Term<typename F::value_type>> ts;
  const auto& row = m.rows[i].coeffs;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!ring.field().is_zero(row[j])) ts.push_back({row[j], m.columns[j]});
  return ring.make(std::move(ts));
}

template <CoefficientField F>
ReadOffRows<typename F::value_type> rows_to_polys(const PolyRing<F>& ring,
                                                  const EchelonResult<typename F::value_type>& r) {
  ReadOffRows<typename F::value_type> out;
  for (std::size_t i = 0; i < r.reduced.nrows(); ++i) {
    if (!r.row_pivot[i]) {
      out.zero_rows.push_back(r.reduced.rows[i].sig);
      continue;
    }
    out.polys.push_back({row_polynomial(ring, r.reduced, i), r.reduced.rows[i].sig, false});
    out.source_rows.push_back(i);
  }
  return out;
}

// One row per line: `sig | c1 c2 ... ck`.
template <CoefficientField F>
void dump_matrix(std::ostream& os, const PolyRing<F>& ring, const MacaulayMatrix<typename F::value_type>& m) {
  os << "# degree " << m.degree << ", " << m.nrows() << " x " << m.ncols() << "\n# columns:";
  for (const auto& c : m.columns) os << ' ' << ring.monomial_to_string(c);
  os << '\n';
  for (const auto& row : m.rows) {
    os << signature_to_string(row.sig, ring) << " |";
    for (const auto& c : row.coeffs) os << ' ' << ring.field().to_string(c);
    os << '\n';
  }
}

}  // namespace tropf5
