#pragma once

// Monomials, terms, homogeneous polynomials and the tropical term order.
//
// A term a*x^α is greater than b*x^β when val(a) + w·α < val(b) + w·β, ties
// broken by a classical monomial order (grevlex or lex).  Polynomials keep
// their terms sorted decreasingly for this order, so the leading term is the
// first one.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tropf5/coeff.hpp"
#include "tropf5/errors.hpp"

namespace tropf5 {

inline constexpr std::size_t kMaxVars = 16;

// Dense exponent vector with inline storage.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(check_size(nvars))) {}
  Monomial(std::initializer_list<int> exps) : Monomial(std::span<const int>(exps.begin(), exps.size())) {}
  explicit Monomial(std::span<const int> exps) : nvars_(static_cast<std::uint16_t>(check_size(exps.size()))) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 0xffff) throw std::invalid_argument("exponent out of range");
      exps_[i] = static_cast<std::uint16_t>(exps[i]);
      degree_ += static_cast<std::uint32_t>(exps[i]);
    }
  }

  // x_index in n variables.
  static Monomial variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.exps_[index] = 1;
    m.degree_ = 1;
    return m;
  }

  std::size_t size() const { return nvars_; }
  int degree() const { return static_cast<int>(degree_); }
  int operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, int e) {
    degree_ = degree_ - exps_[i] + static_cast<std::uint32_t>(e);
    exps_[i] = static_cast<std::uint16_t>(e);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  bool divides(const Monomial& b) const {
    if (degree_ > b.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > b.exps_[i]) return false;
    return true;
  }

  // b / *this; requires divides(b).
  Monomial quotient_of(const Monomial& b) const {
    assert(divides(b));
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(b.exps_[i] - exps_[i]);
    r.degree_ = b.degree_ - degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exps_[i];
    return h;
  }

 private:
  static std::size_t check_size(std::size_t n) {
    if (n > kMaxVars) throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
    return n;
  }

  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class Tiebreak { grevlex, lex };

inline std::string to_string(Tiebreak t) { return t == Tiebreak::grevlex ? "grevlex" : "lex"; }
inline Tiebreak parse_tiebreak(const std::string& s) {
  if (s == "grevlex") return Tiebreak::grevlex;
  if (s == "lex") return Tiebreak::lex;
  throw std::invalid_argument("unknown tiebreak '" + s + "' (expected grevlex|lex)");
}

// Classical monomial order used to break ties of weighted valuation.
inline std::strong_ordering compare_tiebreak(Tiebreak t, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.size();
  if (t == Tiebreak::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

// Weight vector w (rationals) plus tiebreak.  Weighted valuations are
// compared exactly after scaling by the common denominator of w.
class TropicalOrder {
 public:
  TropicalOrder() = default;
  TropicalOrder(std::vector<mpq_class> weight, Tiebreak tiebreak) : weight_(std::move(weight)), tiebreak_(tiebreak) {
    mpz_class den = 1;
    for (const auto& q : weight_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    if (!den.fits_slong_p()) throw std::invalid_argument("weight denominators too large");
    scale_ = den.get_si();
    for (const auto& q : weight_) {
      mpz_class s = q.get_num() * (den / q.get_den());
      if (!s.fits_slong_p()) throw std::invalid_argument("weight entries too large");
      scaled_.push_back(s.get_si());
    }
  }
  static TropicalOrder zero_weight(std::size_t nvars, Tiebreak t = Tiebreak::grevlex) {
    return TropicalOrder(std::vector<mpq_class>(nvars, mpq_class(0)), t);
  }

  const std::vector<mpq_class>& weight() const { return weight_; }
  Tiebreak tiebreak() const { return tiebreak_; }
  std::size_t size() const { return weight_.size(); }

  // (val + w·α) * common denominator.
  std::int64_t weighted(std::int64_t val, const Monomial& m) const {
    std::int64_t s = val * scale_;
    for (std::size_t i = 0; i < scaled_.size(); ++i) s += scaled_[i] * m[i];
    return s;
  }

  // Order on nonzero terms given by their coefficient valuations.
  std::strong_ordering compare(ExtInt va, const Monomial& a, ExtInt vb, const Monomial& b) const {
    assert(!va.is_infinite() && !vb.is_infinite());
    const std::int64_t ka = weighted(va.value(), a);
    const std::int64_t kb = weighted(vb.value(), b);
    if (ka != kb) return kb <=> ka;  // smaller weighted valuation = greater term
    return compare_tiebreak(tiebreak_, a, b);
  }

  // Comparison of unit-coefficient terms x^α, x^β.
  std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) const { return compare(0, a, 0, b); }

 private:
  std::vector<mpq_class> weight_;
  std::vector<std::int64_t> scaled_;
  std::int64_t scale_ = 1;
  Tiebreak tiebreak_ = Tiebreak::grevlex;
};

template <class V>
struct Term {
  V coeff;
  Monomial mon;
};

// Terms strictly decreasing for the session order; all of equal degree.
template <class V>
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }
  const std::vector<Term<V>>& terms() const { return terms_; }
  const Term<V>& operator[](std::size_t i) const { return terms_[i]; }

  const Term<V>& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mon; }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  template <CoefficientField F>
  friend class PolyRing;
  std::vector<Term<V>> terms_;
};

// All monomials of degree d in n variables, sorted decreasingly by the
// tiebreak order (the column order of Macaulay matrices).
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d, Tiebreak t = Tiebreak::grevlex) {
  if (n < 1 || d < 0) throw std::invalid_argument("monomials_of_degree requires n >= 1, d >= 0");
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [t](const Monomial& a, const Monomial& b) { return compare_tiebreak(t, a, b) > 0; });
  return out;
}

// Polynomial arithmetic in k[x_1..x_n] for a given field and tropical order.
template <CoefficientField F>
class PolyRing {
 public:
  using field_type = F;
  using value_type = typename F::value_type;
  using term_type = Term<value_type>;
  using poly_type = Polynomial<value_type>;

  PolyRing(const F& field, TropicalOrder order, std::vector<std::string> names)
      : field_(&field), order_(std::move(order)), names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("polynomial ring needs at least one variable");
    if (names_.size() > kMaxVars) throw std::invalid_argument("too many variables");
    if (order_.size() != names_.size()) throw std::invalid_argument("weight length must equal the variable count");
  }

  const F& field() const { return *field_; }
  const TropicalOrder& order() const { return order_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  std::strong_ordering compare_terms(const term_type& a, const term_type& b) const {
    return order_.compare(field_->val(a.coeff), a.mon, field_->val(b.coeff), b.mon);
  }
  std::strong_ordering compare_terms(const value_type& ca, const Monomial& a, const value_type& cb,
                                     const Monomial& b) const {
    return order_.compare(field_->val(ca), a, field_->val(cb), b);
  }

  // Combines equal monomials, drops zeros and sorts.  Throws DegreeMismatch
  // on inhomogeneous input.
  poly_type make(std::vector<term_type> terms) const {
    std::sort(terms.begin(), terms.end(), [this](const term_type& a, const term_type& b) {
      return compare_tiebreak(Tiebreak::lex, a.mon, b.mon) > 0;
    });
    poly_type p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
        p.terms_.back().coeff = field_->add(p.terms_.back().coeff, t.coeff);
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(p.terms_, [this](const term_type& t) { return field_->is_zero(t.coeff); });
    for (const auto& t : p.terms_)
      if (t.mon.degree() != p.terms_.front().mon.degree())
        throw DegreeMismatch("polynomial is not homogeneous");
    sort_terms(p);
    return p;
  }

  poly_type from_rational_terms(const std::vector<std::pair<mpq_class, Monomial>>& terms) const {
    std::vector<term_type> ts;
    ts.reserve(terms.size());
    for (const auto& [c, m] : terms) ts.push_back({field_->from_rational(c), m});
    return make(std::move(ts));
  }

  const term_type& leading_term(const poly_type& f) const { return f.leading_term(); }
  const Monomial& leading_monomial(const poly_type& f) const { return f.leading_monomial(); }

  poly_type add(const poly_type& f, const poly_type& g) const {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() != g.degree()) throw DegreeMismatch("adding polynomials of degrees " + std::to_string(f.degree()) +
                                                       " and " + std::to_string(g.degree()));
    std::vector<term_type> ts(f.terms_);
    ts.insert(ts.end(), g.terms_.begin(), g.terms_.end());
    return make(std::move(ts));
  }

  poly_type neg(const poly_type& f) const {
    poly_type r = f;
    for (auto& t : r.terms_) t.coeff = field_->neg(t.coeff);
    return r;
  }

  poly_type sub(const poly_type& f, const poly_type& g) const { return add(f, neg(g)); }

  poly_type scale(const value_type& c, const poly_type& f) const {
    std::vector<term_type> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms_) ts.push_back({field_->mul(c, t.coeff), t.mon});
    std::erase_if(ts, [this](const term_type& t) { return field_->is_zero(t.coeff); });
    poly_type r;
    r.terms_ = std::move(ts);
    sort_terms(r);
    return r;
  }

  poly_type mul_monomial(const Monomial& m, const poly_type& f) const {
    poly_type r = f;
    for (auto& t : r.terms_) t.mon = m * t.mon;
    // x^γ multiplication shifts every weighted valuation by w·γ and the
    // tiebreak is multiplicative, so the order of terms is unchanged.
    return r;
  }

  poly_type mul_term(const term_type& t, const poly_type& f) const { return scale(t.coeff, mul_monomial(t.mon, f)); }

  bool is_sorted(const poly_type& f) const {
    for (std::size_t i = 1; i < f.size(); ++i)
      if (compare_terms(f.terms_[i - 1], f.terms_[i]) <= 0) return false;
    return true;
  }

  std::string monomial_to_string(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += names_[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  std::string to_string(const poly_type& f) const {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms_) {
      std::string c = field_->to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (first) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      first = false;
      if (t.mon.is_one()) {
        s += c;
      } else if (c == "1") {
        s += monomial_to_string(t.mon);
      } else {
        s += c + "*" + monomial_to_string(t.mon);
      }
    }
    return s;
  }

 private:
  void sort_terms(poly_type& p) const {
    std::sort(p.terms_.begin(), p.terms_.end(),
              [this](const term_type& a, const term_type& b) { return compare_terms(a, b) > 0; });
  }

  const F* field_;
  TropicalOrder order_;
  std::vector<std::string> names_;
};

// Default variable names x0, x1, ...
inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace tropf5
