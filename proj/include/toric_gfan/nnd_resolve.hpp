#pragma once

// Newton non-degeneracy checking over every cone of the restricted Groebner
// fan, and toric embedded resolution: a smooth refinement, monomial charts,
// strict transforms and a normal-crossings certificate per chart.

#include "toric_gfan/gfan.hpp"

namespace toric_gfan {

/// Input violates a documented precondition (reported distinctly from a
/// negative answer).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Jacobian criterion

inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const Field& field, std::size_t nvars) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial::constant(field, nvars, 1);
  if (k == 1) return m[0][0];
  Polynomial det(field, nvars);
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant(minor, field, nvars);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

/// All c x c minors of the Jacobian matrix of `gens`.
inline std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& gens, std::size_t c, const Field& field,
                                               std::size_t nvars) {
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < nvars; ++i) row.push_back(g.derivative(i));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> minors;
  if (c > gens.size() || c > nvars) return minors;
  detail::for_each_subset(gens.size(), c, [&](const std::vector<std::size_t>& rows) {
    detail::for_each_subset(nvars, c, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Polynomial>> m;
      for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto col : cols) row.push_back(jac[r][col]);
        m.push_back(std::move(row));
      }
      Polynomial d = determinant(m, field, nvars);
      if (!d.is_zero()) minors.push_back(std::move(d));
    });
  });
  return minors;
}

/// I + (c x c Jacobian minors of I's reduced basis), c = codimension of V(I).
inline Ideal singular_locus_ideal(const Ideal& I) {
  const std::size_t s = I.num_vars();
  const long dim = krull_dimension(I);
  const std::size_t c = s - static_cast<std::size_t>(dim);
  auto gens = I.groebner_basis();
  auto minors = jacobian_minors(gens, c, I.field(), s);
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Ideal(I.field(), s, std::move(gens));
}

/// V(I) has no singular point in the torus (K*)^s.
inline bool smooth_on_torus(const Ideal& I) {
  Ideal torus_part = saturate_torus(I);
  if (torus_part.is_unit()) return true;
  if (krull_dimension(torus_part) == static_cast<long>(I.num_vars())) return true;
  return saturate_torus(singular_locus_ideal(torus_part)).is_unit();
}

/// V(I) is smooth in all of affine space (the empty set counts as smooth).
inline bool smooth_affine(const Ideal& I) {
  if (I.is_unit()) return true;
  if (krull_dimension(I) == static_cast<long>(I.num_vars())) return true;
  return singular_locus_ideal(I).is_unit();
}

// ---------------------------------------------------------------------------
// Newton non-degeneracy

struct NNDWitness {
  Cone cone;
  LatticeVector representative;
  Ideal initial;  // in_phi(v)(Psi^{-1} J) in K[y]
  ToricIdealSpec toric_initial;
  bool smooth = false;
};

struct NNDReport {
  bool verdict = true;
  std::vector<NNDWitness> witnesses;  // one per cone of the fan, all dimensions
  std::optional<std::size_t> failing; // index into witnesses
  RestrictedGroebnerFan groebner_fan;
};

/// Every generator must vanish at the closed orbit: no constant term.
inline void require_vanishes_at_orbit(const ToricIdealSpec& J) {
  const LatticeVector zero(J.ring->rank(), 0);
  for (const auto& g : J.generators)
    if (g.coefficient(zero) != 0)
      throw PreconditionError("generator " + g.to_string() + " does not vanish at the closed orbit");
}

inline NNDReport is_nnd(const ToricIdealSpec& J) {
  require_vanishes_at_orbit(J);
  NNDReport report;
  report.groebner_fan = restricted_groebner_fan(J);
  const auto& ring = *J.ring;
  for (const auto& c : report.groebner_fan.fan.all_cones()) {
    LatticeVector v = c.is_zero_cone() ? LatticeVector(ring.rank(), 0) : c.relative_interior_point();
    Ideal in = initial_ideal(report.groebner_fan.lifted, ring.phi_weight(v));
    bool ok = smooth_on_torus(in);
    report.witnesses.push_back({c, v, in, psi_image(J.ring, in), ok});
    if (!ok && !report.failing) {
      report.verdict = false;
      report.failing = report.witnesses.size() - 1;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Charts

struct ResolutionChart {
  Cone cone;
  std::vector<LatticeVector> rays;             // u^1..u^n, canonical order
  std::vector<bool> exceptional;               // u^k is not a ray of sigma
  std::vector<Polynomial> total_transforms;    // pullbacks of the generators
  std::vector<std::vector<Integer>> exceptional_mults;  // nu_{u^k}(f) per generator
  std::vector<Polynomial> residuals;           // total transform / monomial factor
  Ideal strict_transform;
  bool snc = false;
};

/// Pullback of f under x^alpha -> prod z_k^<u^k, alpha>.
inline Polynomial chart_pullback(const ToricPolynomial& f, const std::vector<LatticeVector>& rays) {
  Polynomial p(f.ring()->field(), rays.size());
  for (const auto& [alpha, c] : f.terms()) {
    Exponent e;
    for (const auto& u : rays) {
      Integer d = dot(u, alpha);
      if (d < 0) throw GeometryError("chart_pullback: ray outside sigma");
      e.push_back(d.get_si());
    }
    p.add_term(e, c);
  }
  return p;
}

inline bool verify_snc(const ResolutionChart& chart);

inline ResolutionChart chart_transform(const Cone& cone, const ToricIdealSpec& J) {
  const auto& ring = *J.ring;
  if (!cone.is_full_dimensional() || !is_smooth(cone)) throw GeometryError("chart_transform: " + cone.to_string() + " is not a smooth maximal cone");
  if (!ring.sigma().contains_cone(cone)) throw GeometryError("chart_transform: cone leaves sigma");
  ResolutionChart chart;
  chart.cone = cone;
  chart.rays = cone.rays();
  const std::size_t n = chart.rays.size();
  const auto& srays = ring.sigma().rays();
  for (const auto& u : chart.rays) chart.exceptional.push_back(!std::binary_search(srays.begin(), srays.end(), u));
  std::vector<Polynomial> pulled;
  for (const auto& f : J.generators) {
    Polynomial p = chart_pullback(f, chart.rays);
    std::vector<Integer> mults;
    Exponent common(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      Valuation m = nu(chart.rays[k], f);
      mults.push_back(m.value);
      common[k] = m.value.get_si();
    }
    Polynomial residual(p.field(), n);
    for (const auto& [e, c] : p.terms()) residual.add_term(e - common, c);
    chart.exceptional_mults.push_back(std::move(mults));
    chart.residuals.push_back(std::move(residual));
    chart.total_transforms.push_back(p);
    pulled.push_back(std::move(p));
  }
  chart.strict_transform = saturate_torus(Ideal(ring.field(), n, std::move(pulled)));
  chart.snc = verify_snc(chart);
  return chart;
}

/// The strict transform is smooth in the chart and meets every intersection
/// of exceptional coordinate hyperplanes transversally.
inline bool verify_snc(const ResolutionChart& chart) {
  const Ideal& S = chart.strict_transform;
  if (S.is_unit()) return true;
  if (!smooth_affine(S)) return false;
  const std::size_t n = S.num_vars();
  const long dim_s = krull_dimension(S);
  const std::size_t codim_s = n - static_cast<std::size_t>(dim_s);
  std::vector<std::size_t> exc;
  for (std::size_t k = 0; k < n; ++k)
    if (chart.exceptional[k]) exc.push_back(k);
  for (std::size_t size = 1; size <= exc.size(); ++size) {
    bool ok = true;
    detail::for_each_subset(exc.size(), size, [&](const std::vector<std::size_t>& pick) {
      if (!ok) return;
      auto gens = S.groebner_basis();
      for (auto i : pick) gens.push_back(Polynomial::variable(S.field(), n, exc[i]));
      Ideal T(S.field(), n, gens);
      if (T.is_unit()) return;
      if (krull_dimension(T) != dim_s - static_cast<long>(size)) {
        ok = false;
        return;
      }
      auto minors = jacobian_minors(gens, codim_s + size, S.field(), n);
      gens.insert(gens.end(), minors.begin(), minors.end());
      if (!Ideal(S.field(), n, gens).is_unit()) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

struct ResolutionOutput {
  RestrictedGroebnerFan groebner_fan;
  Fan fan;
  std::vector<ResolutionChart> charts;  // one per maximal cone of `fan`
  /// For every cone of `fan` (in all_cones() order), the index in
  /// groebner_fan.fan.all_cones() of the smallest Groebner cone containing it.
  std::vector<std::size_t> compatibility;
  bool nnd_verdict = true;
  bool overridden = false;
};

class NotNondegenerate : public PreconditionError {
 public:
  NotNondegenerate(const NNDWitness& w)
      : PreconditionError("ideal is not Newton non-degenerate: cone " + w.cone.to_string() + " at v=" +
                          to_string(w.representative) + " has initial ideal " + w.toric_initial.to_string() +
                          " singular on the torus"),
        cone(w.cone) {}
  Cone cone;
};

inline ResolutionOutput resolve(const ToricIdealSpec& J, bool override_nnd = false) {
  ResolutionOutput out;
  NNDReport report = is_nnd(J);
  out.nnd_verdict = report.verdict;
  if (!report.verdict) {
    if (!override_nnd) throw NotNondegenerate(report.witnesses[*report.failing]);
    out.overridden = true;
  }
  out.groebner_fan = std::move(report.groebner_fan);
  out.fan = regularize(out.groebner_fan.fan);
  for (const auto& c : out.fan.maximal_cones()) out.charts.push_back(chart_transform(c, J));
  const auto gcones = out.groebner_fan.fan.all_cones();
  for (const auto& c : out.fan.all_cones()) {
    LatticeVector v = c.is_zero_cone() ? LatticeVector(c.ambient_rank(), 0) : c.relative_interior_point();
    std::optional<std::size_t> idx;
    for (std::size_t i = 0; i < gcones.size() && !idx; ++i)
      if (gcones[i].contains(v) == Containment::relative_interior || (gcones[i].is_zero_cone() && c.is_zero_cone()))
        idx = i;
    if (!idx || !gcones[*idx].contains_cone(c))
      throw std::logic_error("resolve: refinement is not compatible with the Groebner fan at " + c.to_string());
    out.compatibility.push_back(*idx);
  }
  return out;
}

}  // namespace toric_gfan
