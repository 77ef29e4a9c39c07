#pragma once

// Tropical F5 driver.
//
// The basis is built degree by degree.  In each degree the admissible pairs of
// that degree are written, together with their reductors, in one Macaulay
// matrix whose rows are sorted by increasing signature; tropical LUP reduces
// it without row pivoting and every reduced row whose leading monomial is new
// up to its signature is certified and added to the basis.
//
// Several generators are handled at once by indexing signatures: generator i
// owns signatures x^α e_i, and everything of smaller index plays the part of
// the base ideal I' for it.  Index 0 is reserved for a user-supplied base
// basis G' (signature zero).

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "tropf5/hilbert.hpp"
#include "tropf5/linalg.hpp"
#include "tropf5/poly.hpp"
#include "tropf5/signature.hpp"

namespace tropf5 {

enum class PairRejection { both_in_ideal, f5_criterion, equal_signatures };

inline const char* to_string(PairRejection r) {
  switch (r) {
    case PairRejection::both_in_ideal: return "both_in_ideal";
    case PairRejection::f5_criterion: return "f5_criterion";
    case PairRejection::equal_signatures: return "equal_signatures";
  }
  return "?";
}

struct Pair {
  std::size_t g1 = 0;
  std::size_t g2 = 0;
  Monomial lcm;
  Monomial u1;  // lcm / LM(g1)
  Monomial u2;  // lcm / LM(g2)
  int degree = 0;
  Signature sig1;  // guessed S(u1 g1)
  Signature sig2;  // guessed S(u2 g2)
  Signature guessed_sig;
};

using PairResult = std::variant<Pair, PairRejection>;

struct DegreeRecord {
  int degree = 0;
  int passes = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t reductor_rows = 0;
  std::size_t pairs_processed = 0;
  std::size_t generators = 0;
  std::size_t pairs_created = 0;
  std::size_t rejected_f5 = 0;
  std::size_t rejected_equal = 0;
  std::size_t rejected_both_in_ideal = 0;
  std::size_t zero_reductions = 0;
  std::size_t new_elements = 0;
  double cpu_seconds = 0;
};

struct F5Stats {
  std::size_t pairs_created = 0;
  std::size_t rejected_f5 = 0;
  std::size_t rejected_equal = 0;
  std::size_t rejected_both_in_ideal = 0;
  std::size_t zero_reductions = 0;
  std::size_t matrices = 0;
  std::size_t max_rows = 0;
  std::size_t max_cols = 0;
  std::size_t indistinguishable_entries = 0;
  std::size_t precision_zero_rows = 0;
  std::vector<DegreeRecord> degrees;
  std::vector<std::string> notices;
};

template <class V>
struct BasisState {
  std::vector<LabeledPoly<V>> basis;          // G, including G' (signature zero)
  std::map<int, std::vector<Pair>> queue;     // B, keyed by degree
  int degree = 0;                             // next degree to examine
  std::vector<std::pair<int, Polynomial<V>>> pending;  // generators not yet introduced (index, poly)
  std::vector<int> generator_degrees;         // by index; entry 0 unused
  SyzygyStandIn syzygies;                     // LM(I') per index
  SignatureOrder signature_order = SignatureOrder::position_over_term;
  std::optional<std::vector<long long>> reference_hilbert;  // numerator for <LM(I)>
  F5Stats stats;
};

struct F5Options {
  SignatureOrder signature_order = SignatureOrder::position_over_term;
  // Replace each pair half by t·g for the g of largest signature dividing it.
  bool rewriting = false;
  int max_degree = 200;
  bool allow_precision_zero_rows = false;
  // Stop once <LM(G)> is provably all of LM(I): either it contains every
  // monomial of the current degree, or its Hilbert series matches that of a
  // classical basis of the same ideal.
  bool completeness_stop = true;
  // Debug scans after every step (S-irreducibility, signature uniqueness,
  // degree identity).  Violations throw std::logic_error.
  bool check_invariants = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::function<void(const DegreeRecord&)> on_degree;
  std::ostream* matrix_dump = nullptr;
};

template <CoefficientField F>
SignOrder sign_order(const PolyRing<F>& ring, const BasisState<typename F::value_type>& st) {
  return SignOrder(ring.order(), st.syzygies, st.signature_order);
}

// Leading monomial of f as the syzygy set of the signature order needs it:
// the tropical LM for syzygy_split, the greatest unit monomial of the
// support for position_over_term.
template <CoefficientField F>
Monomial syzygy_monomial(const PolyRing<F>& ring, SignatureOrder mode, const Polynomial<typename F::value_type>& f) {
  if (mode == SignatureOrder::syzygy_split) return f.leading_monomial();
  const Monomial* best = nullptr;
  for (const auto& t : f.terms())
    if (!best || ring.order().compare_monomials(t.mon, *best) > 0) best = &t.mon;
  return *best;
}

// S-pair of two basis elements with the admissibility tests that can be
// decided now: the trivial-syzygy F5 criterion and distinct product
// signatures.  Rejections are values.
template <CoefficientField F>
PairResult spair(const PolyRing<F>& ring, const BasisState<typename F::value_type>& st, std::size_t i1,
                 std::size_t i2) {
  const auto& g1 = st.basis[i1];
  const auto& g2 = st.basis[i2];
  if (g1.sig.is_zero() && g2.sig.is_zero()) return PairRejection::both_in_ideal;
  const SignOrder ord = sign_order(ring, st);
  Pair p;
  p.g1 = i1;
  p.g2 = i2;
  const Monomial& lm1 = g1.poly.leading_monomial();
  const Monomial& lm2 = g2.poly.leading_monomial();
  p.lcm = lcm(lm1, lm2);
  p.u1 = lm1.quotient_of(p.lcm);
  p.u2 = lm2.quotient_of(p.lcm);
  p.degree = p.lcm.degree();
  p.sig1 = guessed_sig_of_multiple(p.u1, g1.sig);
  p.sig2 = guessed_sig_of_multiple(p.u2, g2.sig);
  if (ord.in_syzygy_set(p.sig1) || ord.in_syzygy_set(p.sig2)) return PairRejection::f5_criterion;
  const auto c = ord.compare(p.sig1, p.sig2);
  if (c == 0) return PairRejection::equal_signatures;
  p.guessed_sig = c > 0 ? p.sig1 : p.sig2;
  return p;
}

// A prospective matrix row: mult * base, labeled with a guessed signature.
template <class V>
struct RowSource {
  const Polynomial<V>* base = nullptr;
  Monomial mult;
  Signature sig;
  bool in_syzygy_set = false;
  Monomial lm;  // mult * LM(base)
  std::size_t seq = 0;
};

template <class V>
struct Preprocessed {
  MacaulayMatrix<V> matrix;
  std::vector<RowSource<V>> rows;  // in matrix row order
  std::size_t reductor_rows = 0;
};

namespace detail {

template <CoefficientField F>
RowSource<typename F::value_type> make_source(const SignOrder& ord, const Polynomial<typename F::value_type>& base,
                                              const Monomial& mult, const Signature& sig, std::size_t seq) {
  RowSource<typename F::value_type> s;
  s.base = &base;
  s.mult = mult;
  s.sig = sig;
  s.in_syzygy_set = ord.in_syzygy_set(sig);
  s.lm = mult * base.leading_monomial();
  s.seq = seq;
  return s;
}

// Reductor choice for a monomial: smallest guessed signature, then smallest
// multiplier (degree, then tropical order).  Multiples whose guessed signature
// already fails the F5 criterion are never used.
template <CoefficientField F>
std::optional<std::size_t> choose_reductor(const PolyRing<F>& ring, const BasisState<typename F::value_type>& st,
                                           const SignOrder& ord, const Monomial& m, Monomial& mult_out,
                                           Signature& sig_out) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < st.basis.size(); ++k) {
    const auto& g = st.basis[k];
    const Monomial& lm = g.poly.leading_monomial();
    if (!lm.divides(m)) continue;
    Monomial delta = lm.quotient_of(m);
    Signature sig = guessed_sig_of_multiple(delta, g.sig);
    if (ord.in_syzygy_set(sig)) continue;
    if (best) {
      const auto c = ord.compare(sig, false, sig_out, false);
      if (c > 0) continue;
      if (c == 0) {
        if (delta.degree() > mult_out.degree()) continue;
        if (delta.degree() == mult_out.degree() && ring.order().compare_monomials(delta, mult_out) >= 0) continue;
      }
    }
    best = k;
    mult_out = delta;
    sig_out = sig;
  }
  return best;
}

inline double cpu_now() { return static_cast<double>(std::clock()) / CLOCKS_PER_SEC; }

}  // namespace detail

// Symbolic preprocessing: adds, for every monomial occurring in the rows, one
// reductor from the basis, then orders the rows by increasing signature with
// at most one row per nonzero signature (smallest leading term kept).
template <CoefficientField F>
Preprocessed<typename F::value_type> symbolic_preprocessing(const PolyRing<F>& ring,
                                                            const BasisState<typename F::value_type>& st,
                                                            std::vector<RowSource<typename F::value_type>> sources,
                                                            int d) {
  using V = typename F::value_type;
  const SignOrder ord = sign_order(ring, st);
  Preprocessed<V> out;
  if (sources.empty()) {
    out.matrix.degree = d;
    return out;
  }

  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> work;
  auto visit = [&](const RowSource<V>& s) {
    for (const auto& t : *s.base) {
      Monomial m = s.mult * t.mon;
      if (seen.insert(m).second) work.push_back(m);
    }
  };
  for (const auto& s : sources) {
    if (s.mult.degree() + s.base->degree() != d) throw DegreeMismatch("pair half of the wrong degree");
    visit(s);
  }
  std::size_t seq = sources.size();
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    Monomial mult;
    Signature sig;
    auto k = detail::choose_reductor(ring, st, ord, m, mult, sig);
    if (!k) continue;
    sources.push_back(detail::make_source<F>(ord, st.basis[*k].poly, mult, sig, seq++));
    ++out.reductor_rows;
    visit(sources.back());
  }

  std::sort(sources.begin(), sources.end(), [&](const RowSource<V>& a, const RowSource<V>& b) {
    const auto c = ord.compare(a.sig, a.in_syzygy_set, b.sig, b.in_syzygy_set);
    if (c != 0) return c < 0;
    const auto lt = ring.compare_terms(a.base->leading_term().coeff, a.lm, b.base->leading_term().coeff, b.lm);
    if (lt != 0) return a.sig.is_zero() ? lt > 0 : lt < 0;
    return a.seq < b.seq;
  });

  std::vector<RowSource<V>> kept;
  kept.reserve(sources.size());
  for (auto& s : sources) {
    if (!kept.empty()) {
      const auto& prev = kept.back();
      if (s.sig.is_zero()) {
        if (prev.sig.is_zero() && prev.base == s.base && prev.mult == s.mult) continue;
      } else if (ord.compare(prev.sig, prev.in_syzygy_set, s.sig, s.in_syzygy_set) == 0) {
        continue;
      }
    }
    kept.push_back(std::move(s));
  }

  std::vector<std::pair<Signature, Polynomial<V>>> rows;
  rows.reserve(kept.size());
  for (const auto& s : kept) rows.emplace_back(s.sig, ring.mul_monomial(s.mult, *s.base));
  std::vector<const Polynomial<V>*> ps;
  for (const auto& r : rows) ps.push_back(&r.second);
  auto columns = support_columns<V>(ps, ring.order().tiebreak());
  out.matrix = matrix_from_rows(ring, d, std::move(columns), std::span<const std::pair<Signature, Polynomial<V>>>(rows));
  out.rows = std::move(kept);
  return out;
}

namespace detail {

// Not reachable as t·LM(g) with t·S(g) <= sig by the current basis.
template <CoefficientField F>
bool is_new_up_to_signature(const BasisState<typename F::value_type>& st, std::size_t basis_size,
                            const SignOrder& ord, const Monomial& m, const Signature& sig) {
  for (std::size_t k = 0; k < basis_size; ++k) {
    const auto& g = st.basis[k];
    const Monomial& lm = g.poly.leading_monomial();
    if (!lm.divides(m)) continue;
    Signature t_sig = guessed_sig_of_multiple(lm.quotient_of(m), g.sig);
    if (t_sig.is_zero()) return false;
    if (ord.in_syzygy_set(t_sig)) continue;
    if (ord.compare(t_sig, sig) <= 0) return false;
  }
  return true;
}

template <CoefficientField F>
void check_invariants(const PolyRing<F>& ring, const BasisState<typename F::value_type>& st,
                      std::size_t first_new) {
  const SignOrder ord = sign_order(ring, st);
  for (std::size_t k = first_new; k < st.basis.size(); ++k) {
    const auto& h = st.basis[k];
    if (!sig_degree_check(h, st.generator_degrees)) throw std::logic_error("degree identity violated");
    if (!h.certified) throw std::logic_error("uncertified basis element");
    const Monomial& m = h.poly.leading_monomial();
    for (std::size_t j = 0; j < st.basis.size(); ++j) {
      if (j == k) continue;
      const auto& g = st.basis[j];
      if (!g.sig.is_zero() && !h.sig.is_zero() && ord.compare(g.sig, h.sig) == 0)
        throw std::logic_error("two basis elements share a nonzero signature");
      const Monomial& lm = g.poly.leading_monomial();
      if (!lm.divides(m)) continue;
      Signature t_sig = guessed_sig_of_multiple(lm.quotient_of(m), g.sig);
      if (!t_sig.is_zero() && ord.in_syzygy_set(t_sig)) continue;
      if (ord.compare(t_sig, h.sig) < 0) throw std::logic_error("basis element is S-reducible");
    }
  }
}

template <CoefficientField F>
void enqueue_pairs(const PolyRing<F>& ring, BasisState<typename F::value_type>& st, std::size_t k, int d,
                   DegreeRecord& rec) {
  for (std::size_t j = 0; j < k; ++j) {
    PairResult r = spair(ring, st, j, k);
    if (auto* rej = std::get_if<PairRejection>(&r)) {
      switch (*rej) {
        case PairRejection::both_in_ideal: ++rec.rejected_both_in_ideal; break;
        case PairRejection::f5_criterion: ++rec.rejected_f5; break;
        case PairRejection::equal_signatures: ++rec.rejected_equal; break;
      }
      continue;
    }
    Pair& p = std::get<Pair>(r);
    // Pairs of the current degree come from LM(g) | LM(h); those rows were
    // part of the final matrix of this degree.
    if (p.degree <= d) continue;
    ++rec.pairs_created;
    st.queue[p.degree].push_back(std::move(p));
  }
}

}  // namespace detail

enum class Progress { Continue, Done };

// Next degree with work, if any.
template <class V>
std::optional<int> next_degree(const BasisState<V>& st) {
  std::optional<int> d;
  if (!st.queue.empty()) d = st.queue.begin()->first;
  for (const auto& [idx, poly] : st.pending)
    if (!d || poly.degree() < *d) d = poly.degree();
  return d;
}

template <class V>
Progress termination_monitor(const BasisState<V>& st, int max_degree) {
  auto d = next_degree(st);
  if (!d) return Progress::Done;
  if (*d > max_degree) throw MaxDegreeExceeded(*d, max_degree);
  return Progress::Continue;
}

// One degree of Algorithm 1: pops the pairs of degree d, reduces them in one
// signature-ordered matrix and certifies the new basis elements.  When a new
// element h makes some t·g (LM(g) | LM(h), t·S(g) > S(h)) a needed pair of
// the same degree, the matrix is rebuilt with that row included.
template <CoefficientField F>
void f5_step(const PolyRing<F>& ring, BasisState<typename F::value_type>& st, int d, const F5Options& opts = {}) {
  using V = typename F::value_type;
  const double t0 = detail::cpu_now();
  DegreeRecord rec;
  rec.degree = d;

  std::vector<Pair> pairs;
  if (auto it = st.queue.find(d); it != st.queue.end()) {
    pairs = std::move(it->second);
    st.queue.erase(it);
  }
  rec.pairs_processed = pairs.size();

  SignOrder ord = sign_order(ring, st);
  std::vector<RowSource<V>> sources;
  std::size_t seq = 0;
  auto add_half = [&](std::size_t gi, const Monomial& u, const Signature& sig) {
    const LabeledPoly<V>* g = &st.basis[gi];
    Monomial mult = u;
    if (opts.rewriting && !sig.is_zero()) {
      const LabeledPoly<V>* best = nullptr;
      for (const auto& cand : st.basis) {
        if (cand.sig.index != sig.index || !cand.sig.mon.divides(sig.mon)) continue;
        if (!best || ord.compare(cand.sig, best->sig) > 0) best = &cand;
      }
      if (best) {
        g = best;
        mult = best->sig.mon.quotient_of(sig.mon);
      }
    }
    sources.push_back(detail::make_source<F>(ord, g->poly, mult, sig, seq++));
  };
  for (const auto& p : pairs) {
    add_half(p.g1, p.u1, p.sig1);
    add_half(p.g2, p.u2, p.sig2);
  }
  std::vector<std::pair<int, Polynomial<V>>> entering;
  for (auto it = st.pending.begin(); it != st.pending.end();) {
    if (it->second.degree() == d) {
      entering.push_back(std::move(*it));
      it = st.pending.erase(it);
    } else {
      ++it;
    }
  }
  rec.generators = entering.size();
  const Monomial one(ring.nvars());
  for (const auto& [idx, poly] : entering)
    sources.push_back(detail::make_source<F>(ord, poly, one, Signature::of(idx, one), seq++));

  if (sources.empty()) {
    st.degree = d + 1;
    return;
  }

  const std::size_t basis_before = st.basis.size();
  LupOptions lopts;
  lopts.allow_precision_zero_rows = opts.allow_precision_zero_rows;
  lopts.deadline = opts.deadline;

  std::vector<LabeledPoly<V>> fresh;
  std::size_t zero_reductions = 0;
  std::size_t precision_zero = 0;
  std::size_t indistinguishable = 0;
  std::vector<Signature> learned;
  for (;;) {
    ++rec.passes;
    learned.clear();
    auto pre = symbolic_preprocessing(ring, st, sources, d);
    rec.rows = pre.matrix.nrows();
    rec.cols = pre.matrix.ncols();
    rec.reductor_rows = pre.reductor_rows;
    if (opts.matrix_dump) dump_matrix(*opts.matrix_dump, ring, pre.matrix);
    auto res = tropical_lup(ring, std::move(pre.matrix), lopts);
    ++st.stats.matrices;
    st.stats.max_rows = std::max(st.stats.max_rows, rec.rows);
    st.stats.max_cols = std::max(st.stats.max_cols, rec.cols);

    fresh.clear();
    zero_reductions = 0;
    precision_zero = res.precision_zero_rows.size();
    indistinguishable = res.indistinguishable_entries;
    for (std::size_t i = 0; i < res.reduced.nrows(); ++i) {
      const Signature& sig = res.reduced.rows[i].sig;
      if (!res.row_pivot[i]) {
        if (sig.is_zero()) continue;
        ++zero_reductions;
        // Under a module monomial order a zero row certifies its guessed
        // signature as a syzygy leading monomial.
        if (st.signature_order == SignatureOrder::position_over_term && !pre.rows[i].in_syzygy_set &&
            std::find(res.precision_zero_rows.begin(), res.precision_zero_rows.end(), i) ==
                res.precision_zero_rows.end())
          learned.push_back(sig);
        continue;
      }
      if (sig.is_zero()) continue;
      if (pre.rows[i].in_syzygy_set) continue;
      auto poly = row_polynomial(ring, res.reduced, i);
      if (!detail::is_new_up_to_signature<F>(st, basis_before, ord, poly.leading_monomial(), sig)) continue;
      fresh.push_back({std::move(poly), sig, true});
    }

    // Same-degree pairs (g, h) with LM(g) | LM(h) need the row t·g.
    bool grew = false;
    for (const auto& h : fresh) {
      const Monomial& m = h.poly.leading_monomial();
      for (std::size_t k = 0; k < basis_before; ++k) {
        const auto& g = st.basis[k];
        const Monomial& lm = g.poly.leading_monomial();
        if (!lm.divides(m)) continue;
        const Monomial t = lm.quotient_of(m);
        Signature tsig = guessed_sig_of_multiple(t, g.sig);
        if (tsig.is_zero() || ord.in_syzygy_set(tsig) || ord.compare(tsig, h.sig) <= 0) continue;
        bool present = false;
        for (const auto& r : pre.rows)
          if (!r.sig.is_zero() && r.sig == tsig) {
            present = true;
            break;
          }
        if (present) continue;
        for (const auto& s : sources)
          if (s.sig == tsig) {
            present = true;
            break;
          }
        if (present) continue;
        sources.push_back(detail::make_source<F>(ord, g.poly, t, tsig, seq++));
        grew = true;
      }
    }
    if (!grew) break;
  }

  for (const auto& s : learned) st.syzygies.add_learned(s.index, s.mon);
  for (auto& h : fresh) {
    st.syzygies.add(h.sig.index, syzygy_monomial(ring, st.signature_order, h.poly));
    st.basis.push_back(std::move(h));
  }
  for (std::size_t k = basis_before; k < st.basis.size(); ++k) detail::enqueue_pairs(ring, st, k, d, rec);

  rec.zero_reductions = zero_reductions;
  rec.new_elements = st.basis.size() - basis_before;
  st.stats.zero_reductions += zero_reductions;
  st.stats.precision_zero_rows += precision_zero;
  st.stats.indistinguishable_entries += indistinguishable;
  st.stats.pairs_created += rec.pairs_created;
  st.stats.rejected_f5 += rec.rejected_f5;
  st.stats.rejected_equal += rec.rejected_equal;
  st.stats.rejected_both_in_ideal += rec.rejected_both_in_ideal;
  rec.cpu_seconds = detail::cpu_now() - t0;
  st.stats.degrees.push_back(rec);
  if (opts.check_invariants) detail::check_invariants(ring, st, basis_before);
  if (opts.on_degree) opts.on_degree(rec);
  st.degree = d + 1;
}

// True iff every monomial of degree d is a multiple of some LM in the basis.
template <class V>
bool leading_monomials_cover_degree(const BasisState<V>& st, std::size_t nvars, Tiebreak tb, int d) {
  std::vector<Monomial> lms;
  for (const auto& g : st.basis)
    if (!g.poly.is_zero() && g.poly.degree() <= d) lms.push_back(g.poly.leading_monomial());
  // Cheap necessary condition first: a pure power of each variable.
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& m : lms)
      if (m.degree() == m[v]) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  for (const auto& m : monomials_of_degree(nvars, d, tb)) {
    bool covered = false;
    for (const auto& lm : lms)
      if (lm.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

template <class V>
std::vector<long long> leading_monomial_hilbert(const BasisState<V>& st, std::size_t nvars) {
  std::vector<Monomial> lms;
  for (const auto& g : st.basis)
    if (!g.poly.is_zero()) lms.push_back(g.poly.leading_monomial());
  return hilbert_numerator(lms, nvars);
}

template <CoefficientField F>
void f5_run(const PolyRing<F>& ring, BasisState<typename F::value_type>& st, const F5Options& opts = {}) {
  while (termination_monitor(st, opts.max_degree) == Progress::Continue) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
      throw ResourceLimit("deadline exceeded");
    const int d = *next_degree(st);
    f5_step(ring, st, d, opts);
    if (!opts.completeness_stop || (st.queue.empty() && st.pending.empty())) continue;
    std::string why;
    if (leading_monomials_cover_degree(st, ring.nvars(), ring.order().tiebreak(), d))
      why = "leading monomials cover every monomial of that degree";
    else if (st.reference_hilbert &&
             leading_monomial_hilbert(st, ring.nvars()) == *st.reference_hilbert)
      why = "Hilbert series of the leading monomials matches the classical basis";
    if (why.empty()) continue;
    st.stats.notices.push_back("stopped after degree " + std::to_string(d) + ": " + why);
    st.queue.clear();
    st.pending.clear();
  }
}

namespace detail {

// Under position_over_term the F5 criterion needs the unit-order leading
// monomials of each I_{i-1}.  With a nontrivial valuation these are not the
// leading monomials of the tropical basis, so they are read off a classical
// basis of the same generators (trivial valuation, coefficients lifted to Q).
// Entries are (index, monomial): the monomial lies in LM(I_j) for all j >= index.
// `hilbert`, when given, receives the numerator for the whole ideal.
template <CoefficientField F>
std::vector<std::pair<int, Monomial>> classical_syzygy_monomials(
    const PolyRing<F>& ring, std::span<const Polynomial<typename F::value_type>> gens, const F5Options& opts,
    std::vector<long long>* hilbert = nullptr) {
  RationalField q(Valuation::trivial());
  PolyRing<RationalField> qring(q, ring.order(), ring.names());
  std::vector<Polynomial<mpq_class>> lifted;
  for (const auto& g : gens) {
    std::vector<std::pair<mpq_class, Monomial>> ts;
    for (const auto& t : g.terms()) ts.emplace_back(ring.field().to_rational(t.coeff), t.mon);
    lifted.push_back(qring.from_rational_terms(ts));
  }
  BasisState<mpq_class> st;
  st.signature_order = SignatureOrder::position_over_term;
  st.generator_degrees.push_back(0);
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    if (lifted[i].is_zero()) continue;
    st.generator_degrees.push_back(lifted[i].degree());
    st.pending.emplace_back(static_cast<int>(i + 1), lifted[i]);
  }
  F5Options o;
  o.max_degree = opts.max_degree;
  o.deadline = opts.deadline;
  o.completeness_stop = opts.completeness_stop;
  f5_run(qring, st, o);
  if (hilbert) *hilbert = leading_monomial_hilbert(st, ring.nvars());
  std::vector<std::pair<int, Monomial>> out;
  for (const auto& g : st.basis) out.emplace_back(g.sig.index, g.poly.leading_monomial());
  return out;
}

template <CoefficientField F>
void seed_classical_syzygies(const PolyRing<F>& ring, BasisState<typename F::value_type>& st,
                             std::span<const Polynomial<typename F::value_type>> gens, const F5Options& opts) {
  if (st.signature_order != SignatureOrder::position_over_term) return;
  if (ring.field().valuation().is_trivial()) return;  // tropical LM = unit-order LM
  std::vector<long long> h;
  for (const auto& [index, m] : classical_syzygy_monomials(ring, gens, opts, &h)) st.syzygies.add(index, m);
  st.reference_hilbert = std::move(h);
}

}  // namespace detail

// Tropical GB of <F>, adding one generator at a time with indexed
// signatures, globally degree by degree.
template <CoefficientField F>
BasisState<typename F::value_type> f5_incremental(const PolyRing<F>& ring,
                                                  std::span<const Polynomial<typename F::value_type>> gens,
                                                  const F5Options& opts = {}) {
  if (gens.empty()) throw EmptyInput();
  BasisState<typename F::value_type> st;
  st.signature_order = opts.signature_order;
  st.generator_degrees.push_back(0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) throw std::invalid_argument("generator " + std::to_string(i + 1) + " is zero");
    st.generator_degrees.push_back(gens[i].degree());
    st.pending.emplace_back(static_cast<int>(i + 1), gens[i]);
  }
  detail::seed_classical_syzygies(ring, st, gens, opts);
  f5_run(ring, st, opts);
  return st;
}

// Tropical normal form of f modulo the span of all multiples of `base` in
// degree deg f (classical reduction by a tropical GB, done as linear algebra).
template <CoefficientField F>
Polynomial<typename F::value_type> normal_form(const PolyRing<F>& ring,
                                               std::span<const Polynomial<typename F::value_type>> base,
                                               const Polynomial<typename F::value_type>& f) {
  using V = typename F::value_type;
  if (f.is_zero()) return f;
  const int d = f.degree();
  std::vector<std::pair<Signature, Polynomial<V>>> rows;
  for (const auto& g : base) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& t : monomials_of_degree(ring.nvars(), d - g.degree(), ring.order().tiebreak()))
      rows.emplace_back(Signature::zero(), ring.mul_monomial(t, g));
  }
  rows.emplace_back(Signature::of(1, Monomial(ring.nvars())), f);
  auto m = matrix_from_rows(ring, d, monomials_of_degree(ring.nvars(), d, ring.order().tiebreak()),
                            std::span<const std::pair<Signature, Polynomial<V>>>(rows));
  LupOptions lopts;
  lopts.allow_precision_zero_rows = true;
  auto res = tropical_lup(ring, std::move(m), lopts);
  const std::size_t last = res.reduced.nrows() - 1;
  if (!res.row_pivot[last]) return {};
  return row_polynomial(ring, res.reduced, last);
}

// Algorithm 1 proper: G' a tropical GB of I' (signature zero), f1 the new
// generator.  Returns G' unchanged, with a notice, when f1 ∈ I'.
template <CoefficientField F>
BasisState<typename F::value_type> f5_extend(const PolyRing<F>& ring,
                                             std::span<const Polynomial<typename F::value_type>> base,
                                             const Polynomial<typename F::value_type>& f1,
                                             const F5Options& opts = {}) {
  BasisState<typename F::value_type> st;
  st.signature_order = opts.signature_order;
  for (const auto& g : base) {
    if (g.is_zero()) continue;
    st.basis.push_back({g, Signature::zero(), true});
    st.syzygies.add(0, syzygy_monomial(ring, st.signature_order, g));
  }
  if (f1.is_zero()) throw std::invalid_argument("f1 is zero");
  st.generator_degrees = {0, f1.degree()};
  auto reduced = normal_form(ring, base, f1);
  if (reduced.is_zero()) {
    st.stats.notices.push_back("f1 lies in I'; returning G' unchanged");
    return st;
  }
  st.pending.emplace_back(1, std::move(reduced));
  if (st.signature_order == SignatureOrder::position_over_term && !ring.field().valuation().is_trivial()) {
    // Shadow of [base..., f1]: index <= |base| entries belong to I'.
    std::vector<Polynomial<typename F::value_type>> all(base.begin(), base.end());
    all.push_back(f1);
    std::vector<long long> h;
    for (const auto& [index, m] : detail::classical_syzygy_monomials(ring, std::span<const Polynomial<typename F::value_type>>(all), opts, &h))
      if (index <= static_cast<int>(base.size())) st.syzygies.add(0, m);
    st.reference_hilbert = std::move(h);
  }
  f5_run(ring, st, opts);
  return st;
}

// Basis polynomials (dropping elements whose leading monomial is a multiple
// of another element's leading monomial).
template <class V>
std::vector<Polynomial<V>> minimal_basis(const std::vector<LabeledPoly<V>>& basis) {
  std::vector<Polynomial<V>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& m = basis[i].poly.leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial& o = basis[j].poly.leading_monomial();
      if (o.divides(m) && (o != m || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(basis[i].poly);
  }
  return out;
}

}  // namespace tropf5
