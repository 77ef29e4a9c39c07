#pragma once

// Text format for polynomial systems.
//
//   # Katsura 2
//   vars x0,x1,x2;
//   field QQ p=3;          # QQ, QQ p=P (p-adic valuation), QQ p=P N=K (capped)
//   w 0,1/2,-1;            # optional, zeros by default ("weight" also accepted)
//   tiebreak grevlex;      # or lex
//   homogenize;            # optional, fresh last variable h of weight 0
//   polys: x0 + 2*x1 + 2*x2 - 1,
//          x0^2 - x0 + 2*x1^2 + 2*x2^2;
//
// Statements end with ';' (the last one may omit it).  Terms are products of
// numbers (a or a/b) and variables with optional ^e.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropf5/coeff.hpp"
#include "tropf5/errors.hpp"
#include "tropf5/poly.hpp"

namespace tropf5 {

struct RationalTerm {
  mpq_class coeff;
  std::vector<int> exps;

  friend bool operator==(const RationalTerm&, const RationalTerm&) = default;
};

using RationalPolynomial = std::vector<RationalTerm>;

struct FieldSpec {
  std::optional<long> prime;      // p-adic valuation when set
  std::optional<long> precision;  // capped arithmetic O(p^N) when set

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct SystemFile {
  std::vector<std::string> vars;
  FieldSpec field;
  std::vector<mpq_class> weight;  // empty means zero
  Tiebreak tiebreak = Tiebreak::grevlex;
  bool homogenize = false;
  std::string homogenizing_var = "h";
  std::vector<RationalPolynomial> polys;

  friend bool operator==(const SystemFile&, const SystemFile&) = default;
};

inline int term_degree(const RationalTerm& t) {
  int d = 0;
  for (int e : t.exps) d += e;
  return d;
}

inline bool is_homogeneous(const RationalPolynomial& f) {
  for (const auto& t : f)
    if (term_degree(t) != term_degree(f.front())) return false;
  return true;
}

namespace detail {

class SystemParser {
 public:
  explicit SystemParser(std::string_view text) : text_(text) {}

  SystemFile parse() {
    SystemFile sys;
    bool have_vars = false;
    bool have_polys = false;
    skip_space();
    while (!at_end()) {
      const std::size_t l = line_, c = col_;
      std::string kw = identifier("statement keyword");
      if (kw == "vars") {
        if (have_vars) fail("variables declared twice", l, c);
        sys.vars.push_back(identifier("variable name"));
        while (accept(',')) sys.vars.push_back(identifier("variable name"));
        for (std::size_t i = 0; i < sys.vars.size(); ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (sys.vars[i] == sys.vars[j]) fail("duplicate variable '" + sys.vars[i] + "'", l, c);
        if (sys.vars.size() > kMaxVars) fail("too many variables", l, c);
        have_vars = true;
      } else if (kw == "field") {
        std::string name = identifier("field name");
        if (name != "QQ") fail("unknown field '" + name + "' (expected QQ)", l, c);
        while (peek_identifier()) {
          const std::size_t kl = line_, kc = col_;
          std::string key = identifier("field option");
          expect('=');
          long v = integer();
          if (key == "p") {
            if (!is_prime(v)) fail("p must be prime", kl, kc);
            sys.field.prime = v;
          } else if (key == "N") {
            if (v <= 0) fail("N must be positive", kl, kc);
            sys.field.precision = v;
          } else {
            fail("unknown field option '" + key + "'", kl, kc);
          }
        }
        if (sys.field.precision && !sys.field.prime) fail("N requires p", l, c);
      } else if (kw == "w" || kw == "weight") {
        sys.weight.clear();
        sys.weight.push_back(signed_rational());
        while (accept(',')) sys.weight.push_back(signed_rational());
      } else if (kw == "tiebreak") {
        std::string t = identifier("tiebreak");
        if (t == "grevlex") sys.tiebreak = Tiebreak::grevlex;
        else if (t == "lex") sys.tiebreak = Tiebreak::lex;
        else fail("unknown tiebreak '" + t + "'", l, c);
      } else if (kw == "homogenize") {
        sys.homogenize = true;
        if (peek_identifier()) sys.homogenizing_var = identifier("variable name");
      } else if (kw == "polys") {
        if (!have_vars) fail("polys before vars", l, c);
        expect(':');
        sys.polys.push_back(polynomial(sys.vars));
        while (accept(',')) sys.polys.push_back(polynomial(sys.vars));
        have_polys = true;
      } else {
        fail("unknown statement '" + kw + "'", l, c);
      }
      if (!accept(';') && !at_end()) fail("expected ';'", line_, col_);
      skip_space();
    }
    if (!have_vars) fail("missing vars statement", line_, col_);
    if (!have_polys) fail("missing polys statement", line_, col_);
    if (!sys.weight.empty() && sys.weight.size() != sys.vars.size() &&
        !(sys.homogenize && sys.weight.size() == sys.vars.size() + 1))
      fail("weight has " + std::to_string(sys.weight.size()) + " entries for " + std::to_string(sys.vars.size()) +
               " variables",
           line_, col_);
    if (sys.homogenize &&
        std::find(sys.vars.begin(), sys.vars.end(), sys.homogenizing_var) != sys.vars.end())
      fail("homogenizing variable '" + sys.homogenizing_var + "' is already declared", line_, col_);
    if (!sys.homogenize) {
      for (std::size_t i = 0; i < sys.polys.size(); ++i)
        if (!is_homogeneous(sys.polys[i]))
          throw InhomogeneousError("polynomial " + std::to_string(i + 1) +
                                   " is not homogeneous (use homogenize or --homogenize)");
    }
    return sys;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t l, std::size_t c) const { throw ParseError(what, l, c); }

  bool at_end() const { return pos_ >= text_.size(); }
  char cur() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      if (cur() == '#') {
        while (!at_end() && cur() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(cur()))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool accept(char ch) {
    skip_space();
    if (cur() != ch) return false;
    advance();
    skip_space();
    return true;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'", line_, col_);
  }

  static bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
  static bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

  bool peek_identifier() {
    skip_space();
    return ident_start(cur());
  }

  std::string identifier(const char* what) {
    skip_space();
    if (!ident_start(cur())) fail(std::string("expected ") + what, line_, col_);
    std::string s;
    while (ident_char(cur())) {
      s += cur();
      advance();
    }
    skip_space();
    return s;
  }

  std::string digits() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(cur()))) fail("expected a number", line_, col_);
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(cur()))) {
      s += cur();
      advance();
    }
    skip_space();
    return s;
  }

  long integer() {
    const std::size_t l = line_, c = col_;
    std::string s = digits();
    if (s.size() > 15) fail("integer too large", l, c);
    return std::stol(s);
  }

  mpq_class unsigned_rational() {
    const std::size_t l = line_, c = col_;
    mpz_class num(digits());
    mpz_class den = 1;
    if (accept('/')) {
      den = mpz_class(digits());
      if (den == 0) fail("zero denominator", l, c);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  mpq_class signed_rational() {
    skip_space();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    mpq_class q = unsigned_rational();
    return neg ? mpq_class(-q) : q;
  }

  RationalTerm term(const std::vector<std::string>& vars) {
    RationalTerm t{mpq_class(1), std::vector<int>(vars.size(), 0)};
    do {
      skip_space();
      const std::size_t l = line_, c = col_;
      if (std::isdigit(static_cast<unsigned char>(cur()))) {
        t.coeff *= unsigned_rational();
      } else if (ident_start(cur())) {
        std::string v = identifier("variable");
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) fail("unknown variable '" + v + "'", l, c);
        long e = 1;
        if (accept('^')) e = integer();
        if (e > 1000) fail("exponent too large", l, c);
        t.exps[static_cast<std::size_t>(it - vars.begin())] += static_cast<int>(e);
      } else {
        fail("expected a term", l, c);
      }
    } while (accept('*'));
    return t;
  }

  RationalPolynomial polynomial(const std::vector<std::string>& vars) {
    skip_space();
    const std::size_t l = line_, c = col_;
    RationalPolynomial f;
    auto push = [&](RationalTerm t) {
      for (auto& u : f)
        if (u.exps == t.exps) {
          u.coeff += t.coeff;
          return;
        }
      f.push_back(std::move(t));
    };
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    for (;;) {
      RationalTerm t = term(vars);
      if (neg) t.coeff = -t.coeff;
      push(std::move(t));
      if (accept('+')) neg = false;
      else if (accept('-')) neg = true;
      else break;
    }
    std::erase_if(f, [](const RationalTerm& t) { return t.coeff == 0; });
    if (f.empty()) fail("polynomial is zero", l, c);
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace detail

inline SystemFile parse_system(std::string_view text) { return detail::SystemParser(text).parse(); }

inline std::string rational_term_to_string(const RationalTerm& t, const std::vector<std::string>& vars,
                                           bool leading) {
  std::string s;
  mpq_class c = t.coeff;
  if (c < 0) {
    s += leading ? "-" : " - ";
    c = -c;
  } else if (!leading) {
    s += " + ";
  }
  std::string mon;
  for (std::size_t i = 0; i < t.exps.size(); ++i) {
    if (t.exps[i] == 0) continue;
    if (!mon.empty()) mon += '*';
    mon += vars[i];
    if (t.exps[i] > 1) mon += "^" + std::to_string(t.exps[i]);
  }
  if (mon.empty()) return s + c.get_str();
  if (c == 1) return s + mon;
  return s + c.get_str() + "*" + mon;
}

inline std::string polynomial_to_string(const RationalPolynomial& f, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += rational_term_to_string(f[i], vars, i == 0);
  return s;
}

inline std::string print_system(const SystemFile& sys) {
  auto join = [](const auto& xs, auto f) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += f(xs[i]);
    }
    return s;
  };
  std::string out = "vars " + join(sys.vars, [](const std::string& v) { return v; }) + ";\n";
  out += "field QQ";
  if (sys.field.prime) out += " p=" + std::to_string(*sys.field.prime);
  if (sys.field.precision) out += " N=" + std::to_string(*sys.field.precision);
  out += ";\n";
  if (!sys.weight.empty()) out += "w " + join(sys.weight, [](const mpq_class& q) { return q.get_str(); }) + ";\n";
  out += "tiebreak " + to_string(sys.tiebreak) + ";\n";
  if (sys.homogenize) out += "homogenize " + sys.homogenizing_var + ";\n";
  out += "polys:\n";
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    out += "  " + polynomial_to_string(sys.polys[i], sys.vars);
    out += i + 1 < sys.polys.size() ? ",\n" : ";\n";
  }
  return out;
}

// Adds the homogenizing variable last (weight 0) and clears the flag.
inline SystemFile homogenized(const SystemFile& sys) {
  if (!sys.homogenize) return sys;
  SystemFile out = sys;
  out.homogenize = false;
  out.vars.push_back(sys.homogenizing_var);
  if (out.vars.size() > kMaxVars) throw std::invalid_argument("too many variables after homogenization");
  if (!out.weight.empty() && out.weight.size() < out.vars.size()) out.weight.push_back(mpq_class(0));
  for (auto& f : out.polys) {
    int d = 0;
    for (const auto& t : f) d = std::max(d, term_degree(t));
    for (auto& t : f) t.exps.push_back(d - term_degree(t));
  }
  return out;
}

inline std::vector<mpq_class> effective_weight(const SystemFile& sys) {
  if (sys.weight.empty()) return std::vector<mpq_class>(sys.vars.size(), mpq_class(0));
  return sys.weight;
}

inline TropicalOrder system_order(const SystemFile& sys) { return TropicalOrder(effective_weight(sys), sys.tiebreak); }

template <CoefficientField F>
std::vector<Polynomial<typename F::value_type>> system_polynomials(const PolyRing<F>& ring, const SystemFile& sys) {
  if (sys.homogenize) throw std::logic_error("system_polynomials needs a homogenized system");
  std::vector<Polynomial<typename F::value_type>> out;
  for (const auto& f : sys.polys) {
    std::vector<std::pair<mpq_class, Monomial>> ts;
    for (const auto& t : f) ts.emplace_back(t.coeff, Monomial(std::span<const int>(t.exps)));
    out.push_back(ring.from_rational_terms(ts));
  }
  return out;
}

}  // namespace tropf5
