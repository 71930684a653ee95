#pragma once

// Rational polyhedral cones in a lattice Z^n: canonical form, H/V
// representations, duality, Hilbert bases and placing triangulations.

#include "toric_gfan/lattice.hpp"

#include <map>
#include <set>

namespace toric_gfan {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Extreme rays of the pointed cone {x : A x >= 0, E x = 0}, primitive and sorted.
/// Throws GeometryError if the cone contains a line.
inline std::vector<LatticeVector> extreme_rays(std::size_t n, const std::vector<LatticeVector>& inequalities,
                                               const std::vector<LatticeVector>& equations = {}) {
  const auto eq_basis = row_lattice_basis(equations, n);
  const std::size_t k = eq_basis.size();
  std::set<LatticeVector> found;
  if (k >= n) return {};
  const std::size_t need = n - 1 - k;
  detail::for_each_subset(inequalities.size(), need, [&](const std::vector<std::size_t>& subset) {
    std::vector<LatticeVector> rows = eq_basis;
    for (auto i : subset) rows.push_back(inequalities[i]);
    LatticeVector c = orthogonal_vector(rows, n);
    if (is_zero(c)) return;
    bool nonneg = true, nonpos = true;
    for (const auto& a : inequalities) {
      Integer d = dot(a, c);
      if (d < 0) nonneg = false;
      if (d > 0) nonpos = false;
    }
    if (nonneg && nonpos) throw GeometryError("extreme_rays: cone is not pointed");
    if (!nonneg && !nonpos) return;
    if (!nonneg) c = negate(std::move(c));
    found.insert(primitive(std::move(c)));
  });
  return {found.begin(), found.end()};
}

enum class Containment { outside, boundary, relative_interior };

/// A strongly convex rational polyhedral cone stored in canonical form:
/// primitive extreme rays in lexicographic order, together with an
/// H-representation (facet normals inside the linear span plus equations
/// cutting out the span). Structural equality is equality of cones.
class Cone {
 public:
  Cone() = default;

  static Cone zero(std::size_t n) {
    Cone c;
    c.ambient_ = n;
    c.equations_ = IntMatrix::identity(n).row_list();
    return c;
  }

  static Cone from_generators(std::size_t n, std::vector<LatticeVector> generators) {
    std::set<LatticeVector> gens;
    for (auto& g : generators) {
      if (g.size() != n) throw GeometryError("Cone: generator has wrong length");
      if (!is_zero(g)) gens.insert(primitive(std::move(g)));
    }
    if (gens.empty()) return zero(n);
    std::vector<LatticeVector> G(gens.begin(), gens.end());
    Cone c;
    c.ambient_ = n;
    c.equations_ = kernel_basis(G, n);
    const std::size_t dim = n - c.equations_.size();
    // Facet normals are the extreme rays of the dual cone taken inside span(G).
    c.facets_ = extreme_rays(n, G, c.equations_);
    if (rank(c.facets_, n) != dim) throw GeometryError("Cone: generators do not span a strongly convex cone");
    for (const auto& g : G) {
      std::vector<LatticeVector> tight = c.equations_;
      for (const auto& f : c.facets_)
        if (dot(f, g) == 0) tight.push_back(f);
      if (rank(tight, n) == n - 1) c.rays_.push_back(g);
    }
    std::sort(c.rays_.begin(), c.rays_.end());
    return c;
  }

  static Cone from_generators(std::vector<LatticeVector> generators) {
    if (generators.empty()) throw GeometryError("Cone: cannot infer ambient rank");
    std::size_t n = generators.front().size();
    return from_generators(n, std::move(generators));
  }

  /// {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}.
  static Cone from_inequalities(std::size_t n, const std::vector<LatticeVector>& inequalities,
                                const std::vector<LatticeVector>& equations = {}) {
    return from_generators(n, extreme_rays(n, inequalities, equations));
  }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t dim() const { return ambient_ - equations_.size(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_zero_cone() const { return rays_.empty(); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& facet_normals() const { return facets_; }
  const std::vector<LatticeVector>& equations() const { return equations_; }

  /// Inequality rows (facets plus both signs of each equation) describing the cone.
  std::vector<LatticeVector> inequality_rows() const {
    std::vector<LatticeVector> rows = facets_;
    for (const auto& e : equations_) {
      rows.push_back(e);
      rows.push_back(negate(e));
    }
    return rows;
  }

  Containment contains(const LatticeVector& v) const {
    if (v.size() != ambient_) throw GeometryError("Cone::contains: rank mismatch");
    for (const auto& e : equations_)
      if (dot(e, v) != 0) return Containment::outside;
    bool strict = true;
    for (const auto& f : facets_) {
      Integer d = dot(f, v);
      if (d < 0) return Containment::outside;
      if (d == 0) strict = false;
    }
    return strict ? Containment::relative_interior : Containment::boundary;
  }

  bool contains_point(const LatticeVector& v) const { return contains(v) != Containment::outside; }

  bool contains_cone(const Cone& other) const {
    return std::all_of(other.rays_.begin(), other.rays_.end(),
                       [&](const LatticeVector& r) { return contains_point(r); });
  }

  LatticeVector relative_interior_point() const {
    if (rays_.empty()) throw GeometryError("relative_interior_point: zero cone");
    LatticeVector s(ambient_);
    for (const auto& r : rays_) s = add(s, r);
    return s;
  }

  Cone intersection(const Cone& other) const {
    auto rows = inequality_rows();
    auto more = other.inequality_rows();
    rows.insert(rows.end(), more.begin(), more.end());
    return from_inequalities(ambient_, rows);
  }

  std::vector<Cone> facets() const {
    std::vector<Cone> out;
    for (const auto& f : facets_) {
      std::vector<LatticeVector> tight;
      for (const auto& r : rays_)
        if (dot(f, r) == 0) tight.push_back(r);
      out.push_back(from_generators(ambient_, tight));
    }
    return out;
  }

  /// Every face, including the cone itself and the zero cone, sorted by (dim, rays).
  std::vector<Cone> faces() const {
    std::set<Cone> seen;
    std::vector<Cone> stack{*this};
    while (!stack.empty()) {
      Cone c = std::move(stack.back());
      stack.pop_back();
      if (!seen.insert(c).second) continue;
      for (auto& f : c.facets()) stack.push_back(std::move(f));
    }
    std::vector<Cone> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
      if (a.dim() != b.dim()) return a.dim() < b.dim();
      return a.rays_ < b.rays_;
    });
    return out;
  }

  bool is_face_of(const Cone& other) const {
    for (const auto& f : other.faces())
      if (f == *this) return true;
    return false;
  }

  friend bool operator==(const Cone& a, const Cone& b) { return a.ambient_ == b.ambient_ && a.rays_ == b.rays_; }
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.rays_ < b.rays_;
  }

  std::string to_string() const {
    std::string s = "cone{";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (i) s += ",";
      s += toric_gfan::to_string(rays_[i]);
    }
    return s + "}";
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equations_;
};

inline Containment contains(const Cone& c, const LatticeVector& v) { return c.contains(v); }

inline LatticeVector relative_interior_point(const Cone& c) { return c.relative_interior_point(); }

inline bool is_simplicial(const Cone& c) { return c.rays().size() == c.dim(); }

/// Simplicial with primitive rays extending to a lattice basis.
inline bool is_smooth(const Cone& c) {
  if (!is_simplicial(c)) return false;
  return cone_index(c.rays()) == 1;
}

inline Cone dual_cone(const Cone& c) {
  if (!c.is_full_dimensional()) throw GeometryError("dual_cone: cone is not full-dimensional");
  return Cone::from_generators(c.ambient_rank(), c.facet_normals());
}

// ---------------------------------------------------------------------------
// Placing triangulation

using Simplex = std::vector<std::size_t>;

/// Placing triangulation of cone(points) inserting points in the given order.
/// Returns simplices as sorted index lists into `points`; points that are not
/// extreme at insertion time are skipped.
inline std::vector<Simplex> placing_triangulation(std::size_t n, const std::vector<LatticeVector>& points) {
  std::vector<Simplex> simplices;
  std::vector<LatticeVector> placed;
  std::vector<std::size_t> placed_idx;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& r = points[p];
    if (is_zero(r)) continue;
    if (placed.empty()) {
      simplices.push_back({p});
      placed.push_back(r);
      placed_idx.push_back(p);
      continue;
    }
    const std::size_t d = rank(placed, n);
    auto grown = placed;
    grown.push_back(r);
    if (rank(grown, n) > d) {
      for (auto& s : simplices) {
        s.push_back(p);
        std::sort(s.begin(), s.end());
      }
      placed = std::move(grown);
      placed_idx.push_back(p);
      continue;
    }
    const auto span_eq = kernel_basis(placed, n);
    std::map<Simplex, std::pair<int, std::size_t>> facet_count;  // facet -> (count, opposite vertex)
    for (const auto& s : simplices)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        auto& entry = facet_count[f];
        entry.first += 1;
        entry.second = s[drop];
      }
    std::vector<Simplex> added;
    for (const auto& [f, info] : facet_count) {
      if (info.first != 1) continue;
      std::vector<LatticeVector> rows = span_eq;
      for (auto i : f) rows.push_back(points[i]);
      LatticeVector normal = orthogonal_vector(rows, n);
      if (dot(normal, points[info.second]) < 0) normal = negate(std::move(normal));
      if (dot(normal, r) < 0) {
        Simplex s = f;
        s.push_back(p);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    if (added.empty()) continue;
    simplices.insert(simplices.end(), added.begin(), added.end());
    placed.push_back(r);
    placed_idx.push_back(p);
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

/// Nonzero lattice points of the half-open fundamental parallelepiped of a
/// simplicial cone, each with its barycentric coefficients.
struct ParallelepipedPoint {
  LatticeVector point;
  std::vector<Rational> coefficients;
};

inline std::vector<ParallelepipedPoint> fundamental_parallelepiped_points(const std::vector<LatticeVector>& rays) {
  if (rays.empty()) return {};
  const std::size_t n = rays.front().size();
  const std::size_t k = rays.size();
  // Coordinates are recovered from a k x k invertible minor.
  std::vector<std::size_t> chosen;
  detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
    if (!chosen.empty()) return;
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(j, i) = rays[i][cols[j]];
    if (determinant(m) != 0) chosen = cols;
  });
  if (chosen.empty()) throw GeometryError("fundamental_parallelepiped_points: rays dependent");
  IntMatrix basis(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) basis(j, i) = rays[i][chosen[j]];

  const auto span_eq = kernel_basis(rays, n);
  LatticeVector lo(n), hi(n);
  for (const auto& r : rays)
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] < 0) lo[j] += r[j];
      if (r[j] > 0) hi[j] += r[j];
    }
  std::vector<ParallelepipedPoint> out;
  LatticeVector x = lo;
  while (true) {
    bool in_span = !is_zero(x);
    for (const auto& e : span_eq)
      if (dot(e, x) != 0) {
        in_span = false;
        break;
      }
    if (in_span) {
      LatticeVector rhs(k);
      for (std::size_t j = 0; j < k; ++j) rhs[j] = x[chosen[j]];
      auto lambda = solve_rational(basis, rhs);
      if (lambda && std::all_of(lambda->begin(), lambda->end(),
                                [](const Rational& l) { return l >= 0 && l < 1; }))
        out.push_back({x, *lambda});
    }
    std::size_t j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    x[j] += 1;
  }
  return out;
}

/// Minimal generating set of the semigroup c ∩ Z^n, sorted lexicographically.
inline std::vector<LatticeVector> hilbert_basis(const Cone& c) {
  if (!c.is_full_dimensional()) throw GeometryError("hilbert_basis: cone is not full-dimensional");
  const auto& rays = c.rays();
  const std::size_t n = c.ambient_rank();
  std::set<LatticeVector> candidates(rays.begin(), rays.end());
  for (const auto& simplex : placing_triangulation(n, rays)) {
    std::vector<LatticeVector> srays;
    for (auto i : simplex) srays.push_back(rays[i]);
    for (auto& p : fundamental_parallelepiped_points(srays)) candidates.insert(std::move(p.point));
  }
  std::vector<LatticeVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      if (c.contains_point(subtract(x, y))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace toric_gfan
