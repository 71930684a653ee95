#pragma once

// Coefficient fields (Q and F_p), exponent vectors, monomial orders and
// sparse multivariate polynomials with exact coefficients.

#include "toric_gfan/lattice.hpp"

#include <cctype>
#include <map>
#include <numeric>

namespace toric_gfan {

using Exponent = std::vector<long>;

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Q (characteristic 0) or F_p. Elements are stored as mpq values; over F_p
/// they are integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(); }

  static Field prime(const Integer& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      throw AlgebraError("Field: " + p.get_str() + " is not prime");
    Field f;
    f.p_ = p;
    return f;
  }

  bool is_rationals() const { return p_ == 0; }
  const Integer& characteristic() const { return p_; }

  Rational normalize(const Rational& x) const {
    if (p_ == 0) return x;
    Integer num = x.get_num() % p_;
    Integer den = x.get_den() % p_;
    if (den == 0) throw AlgebraError("Field: denominator divisible by characteristic");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
    Integer r = (num * inv) % p_;
    if (r < 0) r += p_;
    return Rational(r);
  }

  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }
  Rational inv(const Rational& a) const {
    if (a == 0) throw AlgebraError("Field: division by zero");
    return normalize(1 / a);
  }
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  /// Parses "a" or "a/b".
  Rational parse(const std::string& text) const {
    Rational q;
    if (q.set_str(text, 10) != 0) throw AlgebraError("Field: cannot parse coefficient '" + text + "'");
    if (q.get_den() == 0) throw AlgebraError("Field: zero denominator in '" + text + "'");
    q.canonicalize();
    return normalize(q);
  }

  std::string to_string() const { return p_ == 0 ? "Q" : "Fp:" + p_.get_str(); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  Integer p_ = 0;
};

// ---------------------------------------------------------------------------
// Exponent helpers

inline long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

inline long weight_of(const std::vector<long>& w, const Exponent& e) {
  long s = 0;
  for (std::size_t i = 0; i < e.size() && i < w.size(); ++i) s += w[i] * e[i];
  return s;
}

inline LatticeVector to_lattice(const Exponent& e) {
  LatticeVector v;
  v.reserve(e.size());
  for (long x : e) v.emplace_back(x);
  return v;
}

inline Exponent to_exponent(const LatticeVector& v) {
  Exponent e;
  e.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw AlgebraError("exponent out of machine range");
    e.push_back(x.get_si());
  }
  return e;
}

/// Global monomial order: the weight levels are compared in turn (larger
/// weight = larger monomial), then graded reverse lexicographic order with
/// x1 > x2 > ... > xn.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(); }

  static MonomialOrder weighted(std::vector<std::vector<long>> levels) {
    MonomialOrder o;
    o.levels_ = std::move(levels);
    return o;
  }

  int compare(const Exponent& a, const Exponent& b) const {
    for (const auto& w : levels_) {
      long wa = weight_of(w, a), wb = weight_of(w, b);
      if (wa != wb) return wa < wb ? -1 : 1;
    }
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }

  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  const std::vector<std::vector<long>>& levels() const { return levels_; }

 private:
  std::vector<std::vector<long>> levels_;
};

// ---------------------------------------------------------------------------

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  Polynomial() = default;
  Polynomial(Field field, std::size_t num_vars) : field_(std::move(field)), nvars_(num_vars) {}

  static Polynomial constant(const Field& field, std::size_t num_vars, const Rational& c) {
    Polynomial p(field, num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }

  static Polynomial monomial(const Field& field, Exponent e, const Rational& c = 1) {
    Polynomial p(field, e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  static Polynomial variable(const Field& field, std::size_t num_vars, std::size_t i) {
    Exponent e(num_vars, 0);
    e.at(i) = 1;
    return monomial(field, std::move(e));
  }

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  long degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) throw AlgebraError("Polynomial: exponent length mismatch");
    Rational v = field_.normalize(c);
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(e, v);
    if (!inserted) {
      it->second = field_.add(it->second, v);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_.neg(c));
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, a.field_.mul(ca, cb));
    return r;
  }

  Polynomial scaled(const Rational& c) const {
    Polynomial r(field_, nvars_);
    if (field_.normalize(c) == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, field_.mul(x, c));
    return r;
  }

  Polynomial times_monomial(const Exponent& m, const Rational& c = 1) const {
    Polynomial r(field_, nvars_);
    for (const auto& [e, x] : terms_) r.add_term(e + m, field_.mul(x, c));
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(field_, nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Polynomial derivative(std::size_t i) const {
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent d = e;
      d[i] -= 1;
      r.add_term(d, field_.mul(c, Rational(e[i])));
    }
    return r;
  }

  /// Homogenizes with a new last variable.
  Polynomial homogenized() const {
    const long d = degree();
    Polynomial r(field_, nvars_ + 1);
    for (const auto& [e, c] : terms_) {
      Exponent h = e;
      h.push_back(d - total_degree(e));
      r.add_term(h, c);
    }
    return r;
  }

  /// Sets the last variable to 1 and drops it.
  Polynomial dehomogenized() const {
    if (nvars_ == 0) throw AlgebraError("dehomogenized: no variables");
    Polynomial r(field_, nvars_ - 1);
    for (const auto& [e, c] : terms_) r.add_term(Exponent(e.begin(), e.end() - 1), c);
    return r;
  }

  /// Appends `extra` variables that do not occur.
  Polynomial with_extra_variables(std::size_t extra) const {
    Polynomial r(field_, nvars_ + extra);
    for (const auto& [e, c] : terms_) {
      Exponent x = e;
      x.resize(nvars_ + extra, 0);
      r.terms_.emplace(std::move(x), c);
    }
    return r;
  }

  /// Drops trailing variables; they must not occur.
  Polynomial truncated_variables(std::size_t keep) const {
    Polynomial r(field_, keep);
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = keep; i < e.size(); ++i)
        if (e[i] != 0) throw AlgebraError("truncated_variables: variable still occurs");
      r.terms_.emplace(Exponent(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(keep)), c);
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (long k = 0; k < e[i]; ++k) t = field_.mul(t, point[i]);
      s = field_.add(s, t);
    }
    return s;
  }

  /// Terms in decreasing `order`.
  std::vector<std::pair<Exponent, Rational>> sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Exponent, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    return out;
  }

  std::string to_string(const std::string& var = "y") const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(MonomialOrder::grevlex())) {
      Rational a = c;
      bool negative = false;
      if (field_.is_rationals() && a < 0) {
        negative = true;
        a = -a;
      }
      if (first)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        s += a.get_str();
      else if (a == 1)
        s += mono;
      else
        s += a.get_str() + "*" + mono;
    }
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_) throw AlgebraError("Polynomial: incompatible rings");
  }

  Field field_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Minimum of w.e over the support (min convention); nullopt for the zero polynomial.
inline std::optional<long> weight_valuation(const Polynomial& f, const std::vector<long>& w) {
  std::optional<long> best;
  for (const auto& [e, c] : f.terms())
    if (long x = weight_of(w, e); !best || x < *best) best = x;
  return best;
}

/// Sum of the terms of minimal w-weight.
inline Polynomial initial_form(const Polynomial& f, const std::vector<long>& w) {
  Polynomial r(f.field(), f.num_vars());
  auto nu = weight_valuation(f, w);
  if (!nu) return r;
  for (const auto& [e, c] : f.terms())
    if (weight_of(w, e) == *nu) r.add_term(e, c);
  return r;
}

/// Parses expressions such as "y1*y3 - 2/3*y2^2 + 1" in variables <var>1..<var>n.
inline Polynomial parse_polynomial(const Field& field, std::size_t num_vars, const std::string& text,
                                   const std::string& var = "y") {
  Polynomial result(field, num_vars);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw AlgebraError("parse_polynomial: " + why + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return text.substr(start, pos - start);
  };
  skip();
  if (pos == text.size()) return result;
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Rational coeff = sign;
    Exponent e(num_vars, 0);
    bool need_factor = true;
    while (need_factor) {
      skip();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num = read_int();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          num += "/" + read_int();
        }
        coeff *= field.parse(num);
      } else if (text.compare(pos, var.size(), var) == 0) {
        pos += var.size();
        long idx = std::stol(read_int());
        if (idx < 1 || static_cast<std::size_t>(idx) > num_vars) fail("variable index out of range");
        long power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          power = std::stol(read_int());
        }
        e[static_cast<std::size_t>(idx - 1)] += power;
      } else {
        fail("expected factor");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        need_factor = false;
      }
    }
    result.add_term(e, coeff);
  }
  return result;
}

}  // namespace toric_gfan
