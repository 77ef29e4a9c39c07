#pragma once

// Signatures and the signature order.
//
// A signature is (index, monomial): the monomial multiple x^α e_index of the
// index-th generator.  Index 0 is the distinguished zero signature carried by
// elements of the base ideal I'.  Comparison is index-major; inside an index
// it is degree first, then the tropical order on unit-coefficient monomials
// (position_over_term).  syzygy_split additionally puts monomials outside
// LM(I') before monomials in LM(I').  That order is not compatible with
// multiplication, and signatures built under it can be wrong, so it is kept
// only for comparison runs.
//
// SyzygyStandIn holds the monomials x^α with x^α e_i known to be the leading
// term of a syzygy: LM(I_{i-1}) plus whatever zero reductions revealed.

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropf5/poly.hpp"

namespace tropf5 {

struct Signature {
  int index = 0;
  Monomial mon;

  static Signature zero() { return Signature{}; }
  static Signature of(int index, Monomial mon) {
    if (index <= 0) return zero();
    return Signature{index, std::move(mon)};
  }

  bool is_zero() const { return index == 0; }
  int degree() const { return is_zero() ? -1 : mon.degree(); }

  friend bool operator==(const Signature& a, const Signature& b) {
    if (a.index != b.index) return false;
    return a.index == 0 || a.mon == b.mon;
  }
};

template <class V>
struct LabeledPoly {
  Polynomial<V> poly;
  Signature sig;     // guessed until certified
  bool certified = false;
};

// Known leading monomials of syzygies, per generator index: the leading
// monomials of the lower-index part of the basis (LM(I') for each index),
// plus signatures learned from rows that reduced to zero.
class SyzygyStandIn {
 public:
  void add(int index, const Monomial& lm) { entries_.emplace_back(index, lm); }
  void add_learned(int index, const Monomial& m) { learned_.emplace_back(index, m); }

  // m ∈ LM(I'_index): divisible by the leading monomial of a basis element of
  // strictly smaller index, or by a learned syzygy of this index.
  bool contains(int index, const Monomial& m) const {
    for (const auto& [i, lm] : entries_)
      if (i < index && lm.divides(m)) return true;
    for (const auto& [i, lm] : learned_)
      if (i == index && lm.divides(m)) return true;
    return false;
  }

  std::size_t size() const { return entries_.size() + learned_.size(); }
  std::size_t learned() const { return learned_.size(); }

 private:
  std::vector<std::pair<int, Monomial>> entries_;
  std::vector<std::pair<int, Monomial>> learned_;
};

// syzygy_split: inside an index, monomials outside the syzygy set come first
// at each degree, then the tropical order on unit monomials.
// position_over_term: inside an index, degree then the tropical order on unit
// monomials only (a module monomial order); the syzygy set then holds the
// unit-order leading monomials of I'.
enum class SignatureOrder { syzygy_split, position_over_term };

inline std::string to_string(SignatureOrder o) {
  return o == SignatureOrder::syzygy_split ? "syzygy-split" : "position-over-term";
}

inline SignatureOrder parse_signature_order(const std::string& s) {
  if (s == "syzygy-split") return SignatureOrder::syzygy_split;
  if (s == "position-over-term") return SignatureOrder::position_over_term;
  throw std::invalid_argument("unknown signature order '" + s + "'");
}

class SignOrder {
 public:
  SignOrder(const TropicalOrder& order, const SyzygyStandIn& syz,
            SignatureOrder mode = SignatureOrder::syzygy_split)
      : order_(&order), syz_(&syz), mode_(mode) {}

  const TropicalOrder& order() const { return *order_; }
  SignatureOrder mode() const { return mode_; }
  const SyzygyStandIn& syzygies() const { return *syz_; }

  // True iff the signature lies in LM(I') of its index (guess known to be
  // wrong: the true signature is smaller).
  bool in_syzygy_set(const Signature& s) const { return !s.is_zero() && syz_->contains(s.index, s.mon); }

  std::strong_ordering compare(const Signature& a, const Signature& b) const {
    if (a.index != b.index) return a.index <=> b.index;
    if (a.is_zero()) return std::strong_ordering::equal;
    if (a.mon.degree() != b.mon.degree()) return a.mon.degree() <=> b.mon.degree();
    if (mode_ == SignatureOrder::syzygy_split) {
      const bool sa = in_syzygy_set(a);
      const bool sb = in_syzygy_set(b);
      if (sa != sb) return sa ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return order_->compare_monomials(a.mon, b.mon);
  }

  // Same as compare() with the LM(I') flags already known.
  std::strong_ordering compare(const Signature& a, bool a_syz, const Signature& b, bool b_syz) const {
    if (a.index != b.index) return a.index <=> b.index;
    if (a.is_zero()) return std::strong_ordering::equal;
    if (a.mon.degree() != b.mon.degree()) return a.mon.degree() <=> b.mon.degree();
    if (mode_ == SignatureOrder::syzygy_split && a_syz != b_syz)
      return a_syz ? std::strong_ordering::greater : std::strong_ordering::less;
    return order_->compare_monomials(a.mon, b.mon);
  }

  bool less(const Signature& a, const Signature& b) const { return compare(a, b) < 0; }

 private:
  const TropicalOrder* order_;
  const SyzygyStandIn* syz_;
  SignatureOrder mode_;
};

// Guessed signature t·S(g) of the multiple t·g.  The guess is confirmed or
// refuted by the F5 induction, never assumed.
inline Signature guessed_sig_of_multiple(const Monomial& t, const Signature& s) {
  if (s.is_zero()) return Signature::zero();
  return Signature{s.index, t * s.mon};
}

// deg S(p) = deg p - deg f_index for certified nonzero signatures.
template <class V>
bool sig_degree_check(const LabeledPoly<V>& p, std::span<const int> generator_degrees) {
  if (p.sig.is_zero()) return true;
  if (p.poly.is_zero()) return false;
  const auto idx = static_cast<std::size_t>(p.sig.index);
  if (idx >= generator_degrees.size()) return false;
  return p.poly.degree() == p.sig.mon.degree() + generator_degrees[idx];
}

// Signature of α·a + β·b (α, β nonzero).  With distinct signatures the larger
// one is exact; with equal signatures the combination can only be bounded
// strictly below σ.
struct SigCombination {
  enum class Kind { exact, below };
  Kind kind;
  Signature sig;

  friend bool operator==(const SigCombination&, const SigCombination&) = default;
};

inline SigCombination add_signatures(const Signature& a, const Signature& b, const SignOrder& ord) {
  const auto c = ord.compare(a, b);
  if (c > 0) return {SigCombination::Kind::exact, a};
  if (c < 0) return {SigCombination::Kind::exact, b};
  if (a.is_zero()) return {SigCombination::Kind::exact, a};
  return {SigCombination::Kind::below, a};
}

template <CoefficientField F>
std::string signature_to_string(const Signature& s, const PolyRing<F>& ring) {
  if (s.is_zero()) return "0";
  return "e_" + std::to_string(s.index) + " * " + ring.monomial_to_string(s.mon);
}

}  // namespace tropf5
