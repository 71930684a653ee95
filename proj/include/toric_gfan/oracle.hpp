#pragma once

// Degree-truncated brute force for initial ideals: enumerate the elements of
// an ideal up to a degree bound as a coefficient space and read off the
// minimal-weight parts by Gaussian elimination. Used as an independent check
// of the Groebner-based computations.

#include "toric_gfan/toric.hpp"

#include <cstdlib>
#include <functional>

namespace toric_gfan::oracle {

/// Degree bound: TORIC_GFAN_TRUNC_DEGREE if set, else `fallback`.
inline long truncation_degree(long fallback = 6) {
  if (const char* env = std::getenv("TORIC_GFAN_TRUNC_DEGREE")) {
    long d = std::strtol(env, nullptr, 10);
    if (d > 0) return d;
  }
  return fallback;
}

/// All exponents in `nvars` variables of total degree <= d.
inline std::vector<Exponent> monomials_up_to(std::size_t nvars, long d) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == nvars) {
      out.push_back(e);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

/// Row echelon form of sparse rows with pivots at the first column in
/// `columns` order (reduced: pivot columns are cleared in the other rows).
template <typename Key>
std::vector<std::map<Key, Rational>> echelon(const Field& field, const std::vector<std::map<Key, Rational>>& sparse,
                                             const std::vector<Key>& columns) {
  std::map<Key, std::size_t> col_of;
  for (std::size_t j = 0; j < columns.size(); ++j) col_of[columns[j]] = j;
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : sparse) {
    std::vector<Rational> r(columns.size(), 0);
    for (const auto& [e, c] : p) {
      auto it = col_of.find(e);
      if (it == col_of.end()) throw AlgebraError("oracle: monomial outside the truncation");
      r[it->second] = c;
    }
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size() && rank < rows.size(); ++j) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][j] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = field.inv(rows[rank][j]);
    for (auto& x : rows[rank]) x = field.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][j] == 0) continue;
      Rational f = rows[i][j];
      for (std::size_t k = j; k < columns.size(); ++k)
        if (rows[rank][k] != 0) rows[i][k] = field.sub(rows[i][k], field.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  std::vector<std::map<Key, Rational>> out;
  for (std::size_t i = 0; i < rank; ++i) {
    std::map<Key, Rational> p;
    for (std::size_t j = 0; j < columns.size(); ++j)
      if (rows[i][j] != 0) p.emplace(columns[j], rows[i][j]);
    out.push_back(std::move(p));
  }
  return out;
}

/// A spanning set of I intersected with polynomials of degree <= d.
/// Multiples of a grevlex basis suffice because grevlex is degree-compatible.
inline std::vector<Polynomial> truncated_span(const Ideal& I, long d) {
  std::vector<Polynomial> span;
  const auto monos = monomials_up_to(I.num_vars(), d);
  for (const auto& g : I.groebner_basis()) {
    const long dg = g.degree();
    for (const auto& m : monos)
      if (total_degree(m) + dg <= d) span.push_back(g.times_monomial(m));
  }
  return span;
}

/// Span of {in_w(f) : f in I, deg f <= d}, as a list of initial forms.
inline std::vector<Polynomial> truncated_initial_forms(const Ideal& I, const std::vector<long>& w, long d) {
  auto columns = monomials_up_to(I.num_vars(), d);
  std::stable_sort(columns.begin(), columns.end(),
                   [&](const Exponent& a, const Exponent& b) { return weight_of(w, a) < weight_of(w, b); });
  std::vector<Polynomial::Terms> span;
  for (const auto& p : truncated_span(I, d)) span.push_back(p.terms());
  std::vector<Polynomial> forms;
  for (const auto& row : echelon(I.field(), span, columns)) {
    Polynomial p(I.field(), I.num_vars());
    for (const auto& [e, c] : row) p.add_term(e, c);
    forms.push_back(initial_form(p, w));
  }
  return forms;
}

struct TruncatedComparison {
  bool forms_in_candidate = true;  // every brute-force initial form lies in the candidate
  bool candidate_in_forms = true;  // candidate generators lie in the ideal of the forms
};

/// Compares a candidate for in_w(I) with the brute force up to degree d.
inline TruncatedComparison compare_initial_ideal(const Ideal& I, const std::vector<long>& w, const Ideal& candidate,
                                                 long d) {
  TruncatedComparison r;
  auto forms = truncated_initial_forms(I, w, d);
  for (const auto& f : forms)
    if (!candidate.contains(f)) r.forms_in_candidate = false;
  Ideal brute(I.field(), I.num_vars(), forms);
  for (const auto& g : candidate.groebner_basis())
    if (g.degree() <= d && !brute.contains(g)) r.candidate_in_forms = false;
  return r;
}

// ---------------------------------------------------------------------------
// Toric side: elements x^(M gamma) * g with |gamma| + deg(lift g) <= d span the
// truncation of J; no Groebner basis is involved.

/// Span of {In_v(f) : f in the degree-d truncation of J}.
inline std::vector<ToricPolynomial> truncated_toric_initial_forms(const ToricIdealSpec& J, const LatticeVector& v,
                                                                  long d) {
  const auto& ring = J.ring;
  ring->require_in_sigma(v, "truncated_toric_initial_forms");
  const auto monos = monomials_up_to(ring->num_vars(), d);
  std::vector<ToricPolynomial::Terms> span;
  std::set<LatticeVector> support;
  for (const auto& g : J.generators) {
    const long dg = lift_polynomial(g).degree();
    for (const auto& m : monos) {
      if (total_degree(m) + dg > d) continue;
      ToricPolynomial p = ToricPolynomial::monomial(ring, ring->image(m)) * g;
      for (const auto& [b, c] : p.terms()) support.insert(b);
      span.push_back(p.terms());
    }
  }
  std::vector<LatticeVector> columns(support.begin(), support.end());
  std::stable_sort(columns.begin(), columns.end(),
                   [&](const LatticeVector& a, const LatticeVector& b) { return dot(v, a) < dot(v, b); });
  std::vector<ToricPolynomial> forms;
  for (const auto& row : echelon(ring->field(), span, columns)) {
    ToricPolynomial p(ring);
    for (const auto& [b, c] : row) p.add_term(b, c);
    forms.push_back(initial_form(v, p));
  }
  return forms;
}

/// Compares a candidate for In_v(J) with the toric-side brute force up to degree d.
inline TruncatedComparison compare_toric_initial_ideal(const ToricIdealSpec& J, const LatticeVector& v,
                                                       const ToricIdealSpec& candidate, long d) {
  TruncatedComparison r;
  auto forms = truncated_toric_initial_forms(J, v, d);
  const Ideal cand = lift_ideal(candidate);
  for (const auto& f : forms)
    if (!cand.contains(lift_polynomial(f))) r.forms_in_candidate = false;
  const Ideal brute = lift_ideal(ToricIdealSpec(J.ring, forms));
  for (const auto& g : candidate.generators) {
    Polynomial h = lift_polynomial(g);
    if (h.degree() <= d && !brute.contains(h)) r.candidate_in_forms = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive subdivision of sigma: split cells by the tie hyperplanes
// v.M(a - b) = 0 of the Groebner basis taken at each cell's interior point,
// until no such hyperplane cuts through a cell. Each final cell then lies in
// one class; its initial ideal is computed directly at an interior point.

struct OracleCell {
  Cone cone;
  std::string key;
};

inline std::vector<OracleCell> exhaustive_cells(const ToricIdealSpec& J) {
  const auto& ring = *J.ring;
  const Ideal lifted = lift_ideal(J);
  std::vector<Cone> cells{ring.sigma()};
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Cone> next;
    for (const auto& cell : cells) {
      const LatticeVector v = cell.relative_interior_point();
      std::optional<LatticeVector> cut;
      for (const auto& x : weighted_groebner_basis(lifted, WeightOrder{ring.phi_weight(v), {}})) {
        std::vector<LatticeVector> images;
        for (const auto& [e, c] : x.element.terms()) images.push_back(ring.image(e));
        for (std::size_t i = 0; i < images.size() && !cut; ++i)
          for (std::size_t j = i + 1; j < images.size() && !cut; ++j) {
            LatticeVector h = subtract(images[i], images[j]);
            bool pos = false, neg = false;
            for (const auto& r : cell.rays()) {
              Integer d = dot(h, r);
              pos = pos || d > 0;
              neg = neg || d < 0;
            }
            if (pos && neg) cut = h;
          }
        if (cut) break;
      }
      if (!cut) {
        next.push_back(cell);
        continue;
      }
      changed = true;
      auto rows = cell.inequality_rows();
      rows.push_back(*cut);
      next.push_back(Cone::from_inequalities(ring.rank(), rows));
      rows.back() = negate(*cut);
      next.push_back(Cone::from_inequalities(ring.rank(), rows));
    }
    cells = std::move(next);
  }
  std::vector<OracleCell> out;
  for (auto& c : cells) {
    std::string key = initial_ideal(lifted, ring.phi_weight(c.relative_interior_point())).key();
    out.push_back({std::move(c), std::move(key)});
  }
  return out;
}

}  // namespace toric_gfan::oracle
