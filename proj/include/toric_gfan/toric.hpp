#pragma once

// The ring R = K[dual(sigma) ∩ M] presented as K[y1..ys] / I_sigma through
// the Hilbert basis of the dual cone, the maps Psi and phi, and the
// transfer of valuations and initial ideals between the two sides.

#include "toric_gfan/cone.hpp"
#include "toric_gfan/groebner.hpp"

namespace toric_gfan {

/// Integer or +infinity.
struct Valuation {
  bool infinite = true;
  Integer value = 0;

  static Valuation infinity() { return {}; }
  static Valuation finite(Integer v) { return {false, std::move(v)}; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }

  std::string to_string() const { return infinite ? "inf" : value.get_str(); }
};

inline std::vector<long> to_weight(const LatticeVector& v) {
  std::vector<long> w;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw AlgebraError("weight entry out of machine range");
    w.push_back(x.get_si());
  }
  return w;
}

class ToricRing;
using ToricRingPtr = std::shared_ptr<const ToricRing>;

class ToricRing {
 public:
  /// sigma must be full-dimensional (it is strongly convex by construction).
  static ToricRingPtr make(const Cone& sigma, const Field& field = Field::rationals()) {
    return std::shared_ptr<const ToricRing>(new ToricRing(sigma, field));
  }

  const Cone& sigma() const { return sigma_; }
  const Cone& sigma_dual() const { return dual_; }
  const std::vector<LatticeVector>& hilbert() const { return hilbert_; }
  /// n x s matrix whose columns are the Hilbert basis elements.
  const IntMatrix& mmatrix() const { return M_; }
  const Field& field() const { return field_; }
  std::size_t rank() const { return sigma_.ambient_rank(); }
  std::size_t num_vars() const { return hilbert_.size(); }
  const Ideal& toric_ideal() const { return toric_ideal_; }

  /// An integral point in the interior of sigma.
  const LatticeVector& interior_point() const { return interior_; }

  void require_in_sigma(const LatticeVector& v, const char* who) const {
    if (v.size() != rank() || !sigma_.contains_point(v))
      throw GeometryError(std::string(who) + ": " + to_string(v) + " is not in sigma");
  }

  /// (v.alpha^1, ..., v.alpha^s).
  LatticeVector phi(const LatticeVector& v) const {
    require_in_sigma(v, "phi");
    return M_.transposed() * v;
  }

  std::vector<long> phi_weight(const LatticeVector& v) const { return to_weight(phi(v)); }

  /// phi extended linearly to all of N (no membership check).
  LatticeVector phi_linear(const LatticeVector& v) const { return M_.transposed() * v; }

  /// The v in sigma with phi(v) = w, if any.
  std::optional<LatticeVector> phi_preimage(const LatticeVector& w) const {
    auto x = solve_rational(M_.transposed(), w);
    if (!x) return std::nullopt;
    LatticeVector v;
    for (const auto& q : *x) {
      if (q.get_den() != 1) return std::nullopt;
      v.push_back(q.get_num());
    }
    if (!sigma_.contains_point(v)) return std::nullopt;
    return v;
  }

  /// {v in sigma : phi(v) in c}.
  Cone phi_pullback(const Cone& c) const {
    if (c.ambient_rank() != num_vars()) throw GeometryError("phi_pullback: cone in the wrong space");
    std::vector<LatticeVector> rows = sigma_.facet_normals();
    for (const auto& a : c.inequality_rows()) rows.push_back(M_ * a);
    return Cone::from_inequalities(rank(), rows);
  }

  /// M gamma.
  LatticeVector image(const Exponent& gamma) const { return M_ * to_lattice(gamma); }

  /// A gamma >= 0 with M gamma = beta: repeatedly remove the first Hilbert
  /// basis element that keeps the remainder inside the dual cone. Each step
  /// lowers interior_point().beta by at least one.
  Exponent lift_monomial(const LatticeVector& beta) const {
    if (!dual_.contains_point(beta)) throw GeometryError("lift_monomial: " + to_string(beta) + " is not in the dual cone");
    Exponent gamma(num_vars(), 0);
    LatticeVector rest = beta;
    while (!is_zero(rest)) {
      bool step = false;
      for (std::size_t i = 0; i < hilbert_.size(); ++i) {
        LatticeVector next = subtract(rest, hilbert_[i]);
        if (dual_.contains_point(next)) {
          rest = std::move(next);
          gamma[i] += 1;
          step = true;
          break;
        }
      }
      if (!step) throw std::logic_error("lift_monomial: Hilbert basis does not generate " + to_string(beta));
    }
    return gamma;
  }

 private:
  ToricRing(const Cone& sigma, const Field& field) : sigma_(sigma), field_(field) {
    if (!sigma.is_full_dimensional()) throw GeometryError("ToricRing: sigma must be full-dimensional");
    dual_ = dual_cone(sigma_);
    hilbert_ = hilbert_basis(dual_);
    M_ = IntMatrix::from_rows(hilbert_, rank()).transposed();
    interior_ = sigma_.relative_interior_point();
    const std::size_t s = num_vars();
    std::vector<Polynomial> binomials;
    for (const auto& k : kernel_basis(M_)) {
      Exponent plus(s, 0), minus(s, 0);
      for (std::size_t i = 0; i < s; ++i) {
        long x = k[i].get_si();
        (x > 0 ? plus[i] : minus[i]) = std::abs(x);
      }
      binomials.push_back(Polynomial::monomial(field_, plus) - Polynomial::monomial(field_, minus));
    }
    toric_ideal_ = saturate_torus(Ideal(field_, s, binomials));
  }

  Cone sigma_;
  Cone dual_;
  Field field_;
  std::vector<LatticeVector> hilbert_;
  IntMatrix M_;
  LatticeVector interior_;
  Ideal toric_ideal_;
};

inline bool same_ring(const ToricRingPtr& a, const ToricRingPtr& b) {
  return a == b || (a && b && a->sigma() == b->sigma() && a->field() == b->field());
}

/// An element sum a_beta x^beta of R, beta in dual(sigma) ∩ M.
class ToricPolynomial {
 public:
  using Terms = std::map<LatticeVector, Rational>;

  ToricPolynomial() = default;
  explicit ToricPolynomial(ToricRingPtr ring) : ring_(std::move(ring)) {}

  static ToricPolynomial monomial(const ToricRingPtr& ring, const LatticeVector& beta, const Rational& c = 1) {
    ToricPolynomial f(ring);
    f.add_term(beta, c);
    return f;
  }

  static ToricPolynomial from_terms(const ToricRingPtr& ring,
                                    const std::vector<std::pair<LatticeVector, Rational>>& terms) {
    ToricPolynomial f(ring);
    for (const auto& [b, c] : terms) f.add_term(b, c);
    return f;
  }

  const ToricRingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const LatticeVector& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const LatticeVector& beta, const Rational& c) {
    if (!ring_->sigma_dual().contains_point(beta))
      throw GeometryError("ToricPolynomial: exponent " + toric_gfan::to_string(beta) + " is outside the dual cone");
    const Field& k = ring_->field();
    Rational v = k.normalize(c);
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(beta, v);
    if (!inserted) {
      it->second = k.add(it->second, v);
      if (it->second == 0) terms_.erase(it);
    }
  }

  ToricPolynomial& operator+=(const ToricPolynomial& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }

  ToricPolynomial& operator-=(const ToricPolynomial& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add_term(b, ring_->field().neg(c));
    return *this;
  }

  friend ToricPolynomial operator+(ToricPolynomial a, const ToricPolynomial& b) { return a += b; }
  friend ToricPolynomial operator-(ToricPolynomial a, const ToricPolynomial& b) { return a -= b; }

  friend ToricPolynomial operator*(const ToricPolynomial& a, const ToricPolynomial& b) {
    a.check(b);
    ToricPolynomial r(a.ring_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), a.ring_->field().mul(ca, cb));
    return r;
  }

  friend bool operator==(const ToricPolynomial& a, const ToricPolynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [b, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += c.get_str() + "*";
      s += "x^" + toric_gfan::to_string(b);
    }
    return s;
  }

 private:
  void check(const ToricPolynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw AlgebraError("ToricPolynomial: different rings");
  }

  ToricRingPtr ring_;
  Terms terms_;
};

/// An ideal of R given by generators.
struct ToricIdealSpec {
  ToricRingPtr ring;
  std::vector<ToricPolynomial> generators;

  ToricIdealSpec() = default;
  ToricIdealSpec(ToricRingPtr r, std::vector<ToricPolynomial> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
      if (!same_ring(ring, g.ring())) throw AlgebraError("ToricIdealSpec: generator in a different ring");
      if (!g.is_zero()) generators.push_back(std::move(g));
    }
  }

  std::string to_string() const {
    std::string s;
    for (const auto& g : generators) {
      if (!s.empty()) s += ", ";
      s += g.to_string();
    }
    return "(" + s + ")";
  }
};

// ---------------------------------------------------------------------------

/// min{v.beta : beta in Supp(f)}.
inline Valuation nu(const LatticeVector& v, const ToricPolynomial& f) {
  f.ring()->require_in_sigma(v, "nu");
  Valuation best;
  for (const auto& [b, c] : f.terms()) {
    Valuation x = Valuation::finite(dot(v, b));
    if (x < best) best = x;
  }
  return best;
}

/// Sum of the terms of f attaining nu(v, f).
inline ToricPolynomial initial_form(const LatticeVector& v, const ToricPolynomial& f) {
  Valuation n = nu(v, f);
  ToricPolynomial r(f.ring());
  if (n.infinite) return r;
  for (const auto& [b, c] : f.terms())
    if (dot(v, b) == n.value) r.add_term(b, c);
  return r;
}

/// Psi(h) = sum a_gamma x^(M gamma).
inline ToricPolynomial psi_apply(const ToricRingPtr& ring, const Polynomial& h) {
  if (h.num_vars() != ring->num_vars()) throw AlgebraError("psi_apply: polynomial in the wrong ring");
  ToricPolynomial f(ring);
  for (const auto& [e, c] : h.terms()) f.add_term(ring->image(e), c);
  return f;
}

inline Polynomial lift_polynomial(const ToricPolynomial& f) {
  const auto& ring = *f.ring();
  Polynomial h(ring.field(), ring.num_vars());
  for (const auto& [b, c] : f.terms()) h.add_term(ring.lift_monomial(b), c);
  return h;
}

inline Ideal toric_ideal(const ToricRing& ring) { return ring.toric_ideal(); }

/// Psi^{-1}(J) = (lifts of the generators) + I_sigma.
inline Ideal lift_ideal(const ToricIdealSpec& J) {
  const auto& ring = *J.ring;
  std::vector<Polynomial> gens;
  for (const auto& g : J.generators) gens.push_back(lift_polynomial(g));
  const auto& tor = ring.toric_ideal().generators();
  gens.insert(gens.end(), tor.begin(), tor.end());
  return Ideal(ring.field(), ring.num_vars(), std::move(gens));
}

inline bool toric_ideal_equal(const ToricIdealSpec& a, const ToricIdealSpec& b) {
  if (!same_ring(a.ring, b.ring)) throw AlgebraError("toric_ideal_equal: different rings");
  return ideal_equal(lift_ideal(a), lift_ideal(b));
}

inline bool toric_ideal_contains(const ToricIdealSpec& J, const ToricPolynomial& f) {
  return lift_ideal(J).contains(lift_polynomial(f));
}

/// Psi applied to the generators of an ideal of K[y].
inline ToricIdealSpec psi_image(const ToricRingPtr& ring, const Ideal& G) {
  std::vector<ToricPolynomial> gens;
  for (const auto& g : G.groebner_basis()) gens.push_back(psi_apply(ring, g));
  return ToricIdealSpec(ring, std::move(gens));
}

/// In_v(J) = Psi(in_phi(v)(Psi^{-1}(J))).
inline ToricIdealSpec toric_initial_ideal(const ToricIdealSpec& J, const LatticeVector& v) {
  auto w = J.ring->phi_weight(v);
  return psi_image(J.ring, initial_ideal(lift_ideal(J), w));
}

struct MaxWeightLift {
  Polynomial lift;
  std::size_t steps = 0;
};

/// A preimage h of f with nu_phi(v)(h) = nu_v(f): starting from `start`
/// (default: the monomial-wise lift), strip initial forms that Psi kills.
inline MaxWeightLift max_weight_lift(const ToricPolynomial& f, const LatticeVector& v,
                                     std::optional<Polynomial> start = std::nullopt) {
  if (f.is_zero()) throw AlgebraError("max_weight_lift: zero element");
  const auto& ring = f.ring();
  const auto w = ring->phi_weight(v);
  MaxWeightLift r{start ? *start : lift_polynomial(f), 0};
  if (!(psi_apply(ring, r.lift) == f)) throw AlgebraError("max_weight_lift: start is not a preimage");
  while (true) {
    Polynomial in = initial_form(r.lift, w);
    if (!psi_apply(ring, in).is_zero()) break;
    r.lift -= in;
    ++r.steps;
  }
  return r;
}

/// in_w(I) contains no monomial.
inline bool trop_membership(const Ideal& I, const std::vector<long>& w) {
  return !saturate_torus(initial_ideal(I, w)).is_unit();
}

}  // namespace toric_gfan
