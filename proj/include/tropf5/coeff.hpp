#pragma once

// Coefficient fields carrying a valuation.
//
// RationalField: exact rationals with either the trivial or a p-adic
// valuation.  CappedPadicField: p-adic numbers known modulo p^prec, with
// zealous (forward) propagation of the absolute precision.
//
// Both are used through the same interface (see CoefficientField), so that
// polynomial arithmetic and the linear algebra are written once.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropf5/errors.hpp"

namespace tropf5 {

// An element of Z ∪ {+∞}; valuations of zero are +∞.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt infinity() {
    ExtInt e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }
  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, ExtInt e) {
    if (e.infinite_) return os << "+inf";
    return os << e.value_;
  }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

class Valuation {
 public:
  enum class Kind { trivial, padic };

  static Valuation trivial() { return Valuation(); }
  static Valuation padic(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("valuation prime must be prime, got " + std::to_string(p));
    Valuation v;
    v.kind_ = Kind::padic;
    v.prime_ = p;
    return v;
  }

  Kind kind() const { return kind_; }
  bool is_trivial() const { return kind_ == Kind::trivial; }
  // 0 for the trivial valuation.
  std::uint64_t prime() const { return prime_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() = default;
  Kind kind_ = Kind::trivial;
  std::uint64_t prime_ = 0;
};

// Exponent of p in a nonzero integer.
inline std::int64_t padic_order(const mpz_class& z, std::uint64_t p) {
  if (z == 0) return 0;
  mpz_class tmp;
  mpz_class prime(static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(mpz_remove(tmp.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

inline std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

// The operations every coefficient field provides.  Fields are small
// immutable context objects; values are plain data.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::value_type& a, typename F::value_type& acc,
                                    const mpq_class& q) {
  typename F::value_type;
  { F::is_capped } -> std::convertible_to<bool>;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_rational(q) } -> std::same_as<typename F::value_type>;
  { f.to_rational(a) } -> std::same_as<mpq_class>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.div(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  f.sub_mul(acc, a, a);
  { f.val(a) } -> std::same_as<ExtInt>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.valuation() } -> std::same_as<const Valuation&>;
};

// ---------------------------------------------------------------------------

class RationalField {
 public:
  using value_type = mpq_class;
  static constexpr bool is_capped = false;

  explicit RationalField(Valuation v = Valuation::trivial()) : valuation_(v) {}

  const Valuation& valuation() const { return valuation_; }

  value_type zero() const { return mpq_class(0); }
  value_type one() const { return mpq_class(1); }
  value_type from_rational(const mpq_class& q) const { return q; }
  mpq_class to_rational(const value_type& a) const { return a; }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  // acc -= c * x
  void sub_mul(value_type& acc, const value_type& c, const value_type& x) const { acc -= c * x; }
  value_type div(const value_type& a, const value_type& b) const {
    if (sgn(b) == 0) throw DivisionByZero();
    return a / b;
  }

  ExtInt val(const value_type& a) const {
    if (sgn(a) == 0) return ExtInt::infinity();
    if (valuation_.is_trivial()) return 0;
    return padic_order(a.get_num(), valuation_.prime()) - padic_order(a.get_den(), valuation_.prime());
  }

  std::string to_string(const value_type& a) const { return rational_to_string(a); }

 private:
  Valuation valuation_;
};

// ---------------------------------------------------------------------------

// p^val * unit + O(p^prec).  The unit is reduced modulo p^(prec - val) and
// coprime to p.  A value with unit == 0 is indistinguishable from zero: it is
// the zero-of-precision O(p^prec), or the exact zero when prec is infinite.
struct CappedPadic {
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  std::int64_t val = kExact;
  mpz_class unit = 0;
  std::int64_t prec = kExact;

  bool is_exact_zero() const { return unit == 0 && prec >= kExact; }
  friend bool operator==(const CappedPadic& a, const CappedPadic& b) {
    return a.val == b.val && a.prec == b.prec && a.unit == b.unit;
  }
};

class CappedPadicField {
 public:
  using value_type = CappedPadic;
  static constexpr bool is_capped = true;

  // default_precision is the absolute precision N given to converted inputs.
  CappedPadicField(std::uint64_t p, std::int64_t default_precision)
      : valuation_(Valuation::padic(p)), prime_(static_cast<unsigned long>(p)), precision_(default_precision) {
    if (default_precision < 1) throw std::invalid_argument("capped precision must be positive");
    powers_.reserve(static_cast<std::size_t>(4 * default_precision + 64));
    mpz_class acc = 1;
    for (std::int64_t k = 0; k < 4 * default_precision + 64; ++k) {
      powers_.push_back(acc);
      acc *= prime_;
    }
  }

  const Valuation& valuation() const { return valuation_; }
  std::uint64_t prime() const { return valuation_.prime(); }
  std::int64_t default_precision() const { return precision_; }

  value_type zero() const { return CappedPadic{}; }
  value_type zero_of_precision(std::int64_t prec) const {
    CappedPadic z;
    z.val = prec;
    z.prec = prec;
    return z;
  }
  value_type one() const { return from_integer(1, precision_); }

  value_type from_integer(const mpz_class& z, std::int64_t prec) const { return normalize(0, z, prec); }
  value_type from_rational(const mpq_class& q) const { return from_rational(q, precision_); }
  value_type from_rational(const mpq_class& q, std::int64_t prec) const {
    if (sgn(q) == 0) return zero_of_precision(prec);
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    std::int64_t v = remove_p(num) - remove_p(den);
    if (v >= prec) return zero_of_precision(prec);
    const mpz_class& mod = power(prec - v);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class u = num * inv;
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return CappedPadic{v, u, prec};
  }

  // The rational p^val * unit (the canonical representative).
  mpq_class to_rational(const value_type& a) const {
    if (a.unit == 0) return 0;
    mpq_class r(a.unit);
    if (a.val >= 0) {
      r *= mpq_class(power(a.val));
    } else {
      r /= mpq_class(power(-a.val));
    }
    return r;
  }

  bool is_zero(const value_type& a) const { return a.unit == 0; }
  std::int64_t precision(const value_type& a) const { return a.prec; }

  ExtInt val(const value_type& a) const {
    if (a.unit == 0) return ExtInt::infinity();
    return a.val;
  }

  value_type neg(const value_type& a) const {
    if (a.unit == 0) return a;
    CappedPadic r = a;
    r.unit = power(a.prec - a.val) - a.unit;
    return r;
  }

  // prec(a ± b) = min(prec a, prec b)
  value_type add(const value_type& a, const value_type& b) const {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    const std::int64_t prec = std::min(a.prec, b.prec);
    const std::int64_t vm = std::min(a.val, b.val);
    if (vm >= prec) return zero_of_precision(prec);
    mpz_class s = 0;
    if (a.unit != 0 && a.val < prec) s += a.unit * power(a.val - vm);
    if (b.unit != 0 && b.val < prec) s += b.unit * power(b.val - vm);
    return normalize(vm, std::move(s), prec);
  }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  void sub_mul(value_type& acc, const value_type& c, const value_type& x) const { acc = sub(acc, mul(c, x)); }

  // prec(ab) = min(prec a + val b, prec b + val a)
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.is_exact_zero() || b.is_exact_zero()) return zero();
    const std::int64_t prec = std::min(a.prec + b.val, b.prec + a.val);
    if (a.unit == 0 || b.unit == 0) return zero_of_precision(prec);
    const std::int64_t v = a.val + b.val;
    mpz_class u = a.unit * b.unit;
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), power(prec - v).get_mpz_t());
    return CappedPadic{v, std::move(u), prec};
  }

  // prec(a/b) = min(prec a - val b, prec b + val a - 2 val b)
  value_type div(const value_type& a, const value_type& b) const {
    if (b.is_exact_zero()) throw DivisionByZero();
    if (b.unit == 0)
      throw PrecisionExhausted("inverting a value indistinguishable from zero at precision O(p^" +
                               std::to_string(b.prec) + ")");
    if (a.is_exact_zero()) return zero();
    const std::int64_t prec = std::min(a.prec - b.val, b.prec + a.val - 2 * b.val);
    if (a.unit == 0) return zero_of_precision(prec);
    const std::int64_t v = a.val - b.val;
    const mpz_class& mod = power(prec - v);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), b.unit.get_mpz_t(), mod.get_mpz_t());
    mpz_class u = a.unit * inv;
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return CappedPadic{v, std::move(u), prec};
  }

  std::string to_string(const value_type& a) const {
    if (a.is_exact_zero()) return "0";
    if (a.unit == 0) return "O(" + std::to_string(prime()) + "^" + std::to_string(a.prec) + ")";
    return rational_to_string(to_rational(a));
  }

  const mpz_class& power(std::int64_t k) const {
    if (k < 0) throw std::logic_error("negative p-adic power");
    if (static_cast<std::size_t>(k) < powers_.size()) return powers_[static_cast<std::size_t>(k)];
    thread_local mpz_class scratch;
    mpz_ui_pow_ui(scratch.get_mpz_t(), prime_, static_cast<unsigned long>(k));
    return scratch;
  }

 private:
  std::int64_t remove_p(mpz_class& z) const {
    if (z == 0) return 0;
    mpz_class prime(prime_);
    return static_cast<std::int64_t>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
  }

  value_type normalize(std::int64_t v, mpz_class s, std::int64_t prec) const {
    if (s == 0 || v >= prec) return zero_of_precision(prec);
    v += remove_p(s);
    if (v >= prec) return zero_of_precision(prec);
    mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), power(prec - v).get_mpz_t());
    return CappedPadic{v, std::move(s), prec};
  }

  Valuation valuation_;
  unsigned long prime_;
  std::int64_t precision_;
  std::vector<mpz_class> powers_;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<CappedPadicField>);

// m = N - prec(output): absolute digits lost relative to the input precision.
inline std::int64_t precision_loss(std::int64_t input_prec, const CappedPadic& output) {
  return input_prec - output.prec;
}

}  // namespace tropf5
