#pragma once

// Groebner cones and the Groebner fan of an ideal of R restricted to sigma,
// computed in K[y] and pulled back through phi.

#include "toric_gfan/fan.hpp"
#include "toric_gfan/toric.hpp"

#include <deque>

namespace toric_gfan {

struct MarkedPolynomial {
  Polynomial element;
  Polynomial initial;             // the marked terms
  std::vector<Exponent> marked;   // exponents of the initial form
  std::vector<Exponent> trailing; // the remaining exponents
};

/// Reduced Groebner basis (of the homogenization, dehomogenized) for the
/// order refining w, with each element's terms split into marked ones (tied
/// with the leading term on every weight level) and trailing ones.
struct MarkedGB {
  WeightOrder order;
  std::vector<MarkedPolynomial> elements;

  Ideal initial_ideal(const Field& field, std::size_t nvars) const {
    std::vector<Polynomial> forms;
    for (const auto& m : elements) forms.push_back(m.initial);
    return Ideal(field, nvars, std::move(forms)).canonical();
  }

  std::string to_string(const std::string& var = "y") const {
    std::string s;
    for (const auto& m : elements) {
      if (!s.empty()) s += "; ";
      s += "[" + m.initial.to_string(var) + "] " + m.element.to_string(var);
    }
    return s;
  }
};

inline MarkedGB marked_groebner_basis(const Ideal& J, const WeightOrder& w) {
  MarkedGB out{w, {}};
  for (auto& x : weighted_groebner_basis(J, w)) {
    MarkedPolynomial m{x.element, x.initial, {}, {}};
    for (const auto& [e, c] : x.element.terms())
      (x.initial.terms().count(e) ? m.marked : m.trailing).push_back(e);
    out.elements.push_back(std::move(m));
  }
  return out;
}

/// Closed Groebner cone of J at w inside the nonnegative orthant: marked
/// terms keep equal weight and weigh at most any trailing term.
inline Cone groebner_cone(const Ideal& J, const WeightOrder& w) {
  for (long x : w.weight)
    if (x < 0) throw AlgebraError("groebner_cone: negative weight entry");
  const std::size_t s = J.num_vars();
  std::vector<LatticeVector> ineqs = IntMatrix::identity(s).row_list();
  std::vector<LatticeVector> eqs;
  for (const auto& m : marked_groebner_basis(J, w).elements) {
    const LatticeVector a = to_lattice(m.marked.front());
    for (std::size_t i = 1; i < m.marked.size(); ++i) eqs.push_back(subtract(to_lattice(m.marked[i]), a));
    for (const auto& b : m.trailing) ineqs.push_back(subtract(to_lattice(b), a));
  }
  return Cone::from_inequalities(s, ineqs, eqs);
}

inline Cone groebner_cone(const Ideal& J, const std::vector<long>& w) { return groebner_cone(J, WeightOrder{w, {}}); }

// ---------------------------------------------------------------------------

struct GroebnerChamber {
  Cone cone;
  MarkedGB marked;
  Ideal initial;             // in_phi(v)(J) for v in the interior, in K[y]
  ToricIdealSpec toric_initial;
  std::string key;
};

struct RestrictedGroebnerFan {
  ToricIdealSpec ideal;
  Ideal lifted;
  Fan fan;
  std::vector<GroebnerChamber> chambers;  // in the order of fan.maximal_cones()

  const GroebnerChamber& chamber_of(const Cone& c) const {
    for (const auto& ch : chambers)
      if (ch.cone == c) return ch;
    throw GeometryError("chamber_of: " + c.to_string() + " is not a maximal cone");
  }

  /// In_v(J) for any cone of the fan, taken at a relative interior point.
  ToricIdealSpec payload(const Cone& c) const {
    LatticeVector v = c.is_zero_cone() ? LatticeVector(c.ambient_rank(), 0) : c.relative_interior_point();
    return toric_initial_ideal(ideal, v);
  }
};

namespace detail {

inline std::vector<std::vector<long>> pulled_levels(const ToricRing& ring, const std::vector<LatticeVector>& levels) {
  std::vector<std::vector<long>> out;
  for (const auto& l : levels) out.push_back(to_weight(ring.phi_linear(l)));
  return out;
}

/// The chamber containing the infinitesimally perturbed point
/// levels[0] + e levels[1] + e^2 levels[2] + ... (levels[0] in sigma).
inline GroebnerChamber chamber_at(const ToricIdealSpec& J, const Ideal& lifted,
                                  const std::vector<LatticeVector>& levels) {
  const ToricRing& ring = *J.ring;
  auto w = pulled_levels(ring, levels);
  WeightOrder order{w.front(), std::vector<std::vector<long>>(w.begin() + 1, w.end())};
  MarkedGB marked = marked_groebner_basis(lifted, order);
  std::vector<LatticeVector> rows = ring.sigma().facet_normals();
  for (const auto& m : marked.elements) {
    const LatticeVector a = ring.image(m.marked.front());
    for (const auto& b : m.trailing) rows.push_back(subtract(ring.image(b), a));
  }
  Cone cone = Cone::from_inequalities(ring.rank(), rows);
  if (!cone.is_full_dimensional()) throw std::logic_error("restricted_groebner_fan: degenerate chamber");
  Ideal initial = marked.initial_ideal(ring.field(), ring.num_vars());
  std::string key = initial.key();
  ToricIdealSpec toric = psi_image(J.ring, initial);
  return {std::move(cone), std::move(marked), std::move(initial), std::move(toric), std::move(key)};
}

inline std::vector<LatticeVector> unit_levels(std::size_t n) { return IntMatrix::identity(n).row_list(); }

/// Whether the perturbed point described by `levels` lies in the interior of c.
inline bool contains_perturbed(const Cone& c, const std::vector<LatticeVector>& levels) {
  for (const auto& f : c.facet_normals()) {
    int sign = 0;
    for (const auto& l : levels) {
      Integer d = dot(f, l);
      if (d != 0) {
        sign = d > 0 ? 1 : -1;
        break;
      }
    }
    if (sign <= 0) return false;
  }
  return true;
}

}  // namespace detail

/// Breadth-first traversal over the Groebner cones of the homogenized lift
/// (pulled back to sigma), crossing every wall not on the boundary of sigma.
/// Several such cones can share one initial ideal of the lift; their union
/// is the closure of a class and becomes one maximal cone.
inline RestrictedGroebnerFan restricted_groebner_fan(const ToricIdealSpec& J) {
  const ToricRing& ring = *J.ring;
  const std::size_t n = ring.rank();
  if (!ring.sigma().is_full_dimensional()) throw GeometryError("restricted_groebner_fan: sigma not full-dimensional");
  RestrictedGroebnerFan out{J, lift_ideal(J), {}, {}};
  auto perturbed = [&](const LatticeVector& p, const LatticeVector& d) {
    std::vector<LatticeVector> levels{p};
    if (!d.empty()) levels.push_back(d);
    auto units = detail::unit_levels(n);
    levels.insert(levels.end(), units.begin(), units.end());
    return levels;
  };
  std::deque<std::vector<LatticeVector>> frontier{perturbed(ring.interior_point(), {})};
  std::vector<GroebnerChamber> found;
  while (!frontier.empty()) {
    auto levels = std::move(frontier.front());
    frontier.pop_front();
    if (std::any_of(found.begin(), found.end(),
                    [&](const GroebnerChamber& c) { return detail::contains_perturbed(c.cone, levels); }))
      continue;
    GroebnerChamber ch = detail::chamber_at(J, out.lifted, levels);
    for (const auto& normal : ch.cone.facet_normals()) {
      std::vector<LatticeVector> tight;
      for (const auto& r : ch.cone.rays())
        if (dot(normal, r) == 0) tight.push_back(r);
      LatticeVector p = Cone::from_generators(n, tight).relative_interior_point();
      if (ring.sigma().contains(p) != Containment::relative_interior) continue;
      frontier.push_back(perturbed(p, negate(normal)));
    }
    found.push_back(std::move(ch));
  }

  std::map<std::string, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < found.size(); ++i) by_key[found[i].key].push_back(i);
  std::vector<GroebnerChamber> merged;
  for (const auto& [key, members] : by_key) {
    std::vector<LatticeVector> rays;
    for (auto i : members) rays.insert(rays.end(), found[i].cone.rays().begin(), found[i].cone.rays().end());
    GroebnerChamber ch = found[members.front()];
    ch.cone = Cone::from_generators(n, rays);
    for (const auto& other : found)
      if (other.key != key && ch.cone.contains(other.cone.relative_interior_point()) == Containment::relative_interior)
        throw std::logic_error("restricted_groebner_fan: class " + key + " is not convex");
    merged.push_back(std::move(ch));
  }
  std::vector<Cone> cones;
  for (const auto& ch : merged) cones.push_back(ch.cone);
  out.fan = Fan::from_maximal_cones(n, cones);
  for (const auto& c : out.fan.maximal_cones())
    for (auto& ch : merged)
      if (ch.cone == c) out.chambers.push_back(ch);
  return out;
}

/// v1 ~ v2: equal initial ideals In_v1(J) = In_v2(J).
inline bool same_class(const ToricIdealSpec& J, const LatticeVector& v1, const LatticeVector& v2) {
  const Ideal lifted = lift_ideal(J);
  return ideal_equal(initial_ideal(lifted, J.ring->phi_weight(v1)), initial_ideal(lifted, J.ring->phi_weight(v2)));
}

}  // namespace toric_gfan
