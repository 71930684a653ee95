#pragma once

// Fans: finite face-closed collections of cones, the fan axiom checker,
// common refinement and desingularizing subdivision.

#include "toric_gfan/cone.hpp"

#include <tuple>

namespace toric_gfan {

/// A fan stored by its maximal cones. Rays are listed once in lexicographic
/// order and cones refer to them by index.
class Fan {
 public:
  Fan() = default;

  static Fan from_maximal_cones(std::size_t n, std::vector<Cone> cones) {
    Fan f;
    f.ambient_ = n;
    std::set<Cone> unique(cones.begin(), cones.end());
    // Drop cones that are faces of other listed cones.
    std::vector<Cone> kept;
    for (const auto& c : unique) {
      bool is_sub = false;
      for (const auto& d : unique)
        if (!(d == c) && d.dim() > c.dim() && d.contains_cone(c) && c.is_face_of(d)) {
          is_sub = true;
          break;
        }
      if (!is_sub) kept.push_back(c);
    }
    std::set<LatticeVector> rays;
    for (const auto& c : kept) rays.insert(c.rays().begin(), c.rays().end());
    f.rays_.assign(rays.begin(), rays.end());
    for (const auto& c : kept) f.maximal_.push_back(c);
    std::sort(f.maximal_.begin(), f.maximal_.end(),
              [&](const Cone& a, const Cone& b) { return f.indices_of(a) < f.indices_of(b); });
    return f;
  }

  static Fan single_cone(const Cone& c) { return from_maximal_cones(c.ambient_rank(), {c}); }

  std::size_t ambient_rank() const { return ambient_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  bool empty() const { return maximal_.empty(); }

  std::vector<std::size_t> indices_of(const Cone& c) const {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays()) {
      auto it = std::lower_bound(rays_.begin(), rays_.end(), r);
      if (it == rays_.end() || *it != r) throw GeometryError("Fan: cone ray not in fan");
      idx.push_back(static_cast<std::size_t>(it - rays_.begin()));
    }
    return idx;
  }

  std::vector<std::vector<std::size_t>> maximal_cone_indices() const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& c : maximal_) out.push_back(indices_of(c));
    return out;
  }

  /// All cones of the fan (faces of maximal cones), sorted by (dim, rays).
  std::vector<Cone> all_cones() const {
    std::set<Cone> all;
    for (const auto& c : maximal_)
      for (auto& f : c.faces()) all.insert(std::move(f));
    if (all.empty()) all.insert(Cone::zero(ambient_));
    std::vector<Cone> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
      if (a.dim() != b.dim()) return a.dim() < b.dim();
      return a.rays() < b.rays();
    });
    return out;
  }

  /// The cone generated by all rays; equals the support when the support is convex.
  Cone convex_support() const {
    if (rays_.empty()) return Cone::zero(ambient_);
    return Cone::from_generators(ambient_, rays_);
  }

  /// The cone of the fan whose relative interior contains v.
  std::optional<Cone> carrier(const LatticeVector& v) const {
    for (const auto& c : all_cones())
      if (c.contains(v) == Containment::relative_interior) return c;
    return std::nullopt;
  }

  bool is_smooth() const {
    return std::all_of(maximal_.begin(), maximal_.end(), [](const Cone& c) { return toric_gfan::is_smooth(c); });
  }

  friend bool operator==(const Fan& a, const Fan& b) { return a.ambient_ == b.ambient_ && a.maximal_ == b.maximal_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> maximal_;
};

struct FanCheck {
  bool ok = true;
  std::string failure;
};

/// Exact verification of the fan axioms and of `support` being the union of
/// the maximal cones (support must be full-dimensional).
inline FanCheck check_fan(const Fan& fan, const Cone& support) {
  auto fail = [](std::string why) { return FanCheck{false, std::move(why)}; };
  const auto all = fan.all_cones();
  std::set<Cone> members(all.begin(), all.end());
  for (const auto& c : all)
    for (const auto& f : c.facets())
      if (!members.count(f)) return fail("face " + f.to_string() + " of " + c.to_string() + " missing");
  const auto& maxc = fan.maximal_cones();
  for (std::size_t i = 0; i < maxc.size(); ++i) {
    if (!support.contains_cone(maxc[i])) return fail(maxc[i].to_string() + " leaves the support");
    for (std::size_t j = i + 1; j < maxc.size(); ++j) {
      Cone meet = maxc[i].intersection(maxc[j]);
      if (!meet.is_face_of(maxc[i]) || !meet.is_face_of(maxc[j]))
        return fail("intersection of " + maxc[i].to_string() + " and " + maxc[j].to_string() + " is not a face");
    }
  }
  if (!support.is_full_dimensional()) return fail("support is not full-dimensional");
  if (maxc.empty()) return fail("fan is empty");
  // Pseudomanifold test: interior walls are shared by exactly two maximal
  // cones, boundary walls by exactly one.
  std::map<Cone, int> wall_count;
  for (const auto& c : maxc) {
    if (!c.is_full_dimensional()) return fail(c.to_string() + " is not full-dimensional");
    for (const auto& w : c.facets()) wall_count[w] += 1;
  }
  for (const auto& [w, count] : wall_count) {
    bool on_boundary = support.contains(w.relative_interior_point()) == Containment::boundary;
    if (on_boundary && count != 1) return fail("boundary wall " + w.to_string() + " covered twice");
    if (!on_boundary && count != 2) return fail("interior wall " + w.to_string() + " not shared by two cones");
  }
  return {};
}

inline Fan common_refinement(const Fan& f1, const Fan& f2) {
  if (f1.ambient_rank() != f2.ambient_rank()) throw GeometryError("common_refinement: rank mismatch");
  if (!(f1.convex_support() == f2.convex_support())) throw GeometryError("common_refinement: supports differ");
  std::vector<Cone> cones;
  for (const auto& a : f1.maximal_cones())
    for (const auto& b : f2.maximal_cones()) {
      Cone meet = a.intersection(b);
      if (meet.dim() == std::max(a.dim(), b.dim())) cones.push_back(std::move(meet));
    }
  return Fan::from_maximal_cones(f1.ambient_rank(), std::move(cones));
}

// ---------------------------------------------------------------------------
// Desingularization

namespace detail {

struct SimplicialFan {
  std::size_t n = 0;
  std::vector<LatticeVector> rays;
  std::set<Simplex> simplices;

  std::vector<LatticeVector> rays_of(const Simplex& s) const {
    std::vector<LatticeVector> out;
    for (auto i : s) out.push_back(rays[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Replace every simplex containing `face` by the cones over its faces
  /// opposite to the rays of `face`, joined with the new ray.
  void stellar_subdivide(const Simplex& face, LatticeVector ray) {
    const std::size_t id = rays.size();
    rays.push_back(std::move(ray));
    std::set<Simplex> next;
    for (const auto& s : simplices) {
      if (!std::includes(s.begin(), s.end(), face.begin(), face.end())) {
        next.insert(s);
        continue;
      }
      for (auto t : face) {
        Simplex piece;
        for (auto i : s)
          if (i != t) piece.push_back(i);
        piece.push_back(id);
        std::sort(piece.begin(), piece.end());
        next.insert(std::move(piece));
      }
    }
    simplices = std::move(next);
  }
};

}  // namespace detail

/// Smooth fan refining `fan`: triangulate with the existing rays (placing
/// order = lexicographic ray order), then repeatedly stellar-subdivide the
/// non-smooth simplex of smallest index (ties: lexicographic ray list) at
/// the parallelepiped point of minimal coefficient sum (ties: lexicographic).
inline Fan regularize(const Fan& fan) {
  detail::SimplicialFan sf;
  sf.n = fan.ambient_rank();
  sf.rays = fan.rays();
  for (const auto& c : fan.maximal_cones()) {
    auto idx = fan.indices_of(c);
    std::vector<LatticeVector> pts;
    for (auto i : idx) pts.push_back(sf.rays[i]);
    for (const auto& s : placing_triangulation(sf.n, pts)) {
      Simplex g;
      for (auto i : s) g.push_back(idx[i]);
      std::sort(g.begin(), g.end());
      sf.simplices.insert(std::move(g));
    }
  }
  while (true) {
    std::optional<std::tuple<Integer, std::vector<LatticeVector>, Simplex>> worst;
    for (const auto& s : sf.simplices) {
      auto rs = sf.rays_of(s);
      Integer idx = cone_index(rs);
      if (idx == 1) continue;
      auto key = std::make_tuple(idx, rs, s);
      if (!worst || std::tie(std::get<0>(key), std::get<1>(key)) < std::tie(std::get<0>(*worst), std::get<1>(*worst)))
        worst = std::move(key);
    }
    if (!worst) break;
    const Simplex& s = std::get<2>(*worst);
    std::vector<LatticeVector> srays;
    for (auto i : s) srays.push_back(sf.rays[i]);
    auto points = fundamental_parallelepiped_points(srays);
    if (points.empty()) throw GeometryError("regularize: non-smooth cone without interior lattice points");
    const ParallelepipedPoint* best = nullptr;
    Rational best_sum;
    for (const auto& p : points) {
      Rational sum = 0;
      for (const auto& l : p.coefficients) sum += l;
      if (!best || sum < best_sum || (sum == best_sum && p.point < best->point)) {
        best = &p;
        best_sum = sum;
      }
    }
    Simplex face;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (best->coefficients[i] > 0) face.push_back(s[i]);
    sf.stellar_subdivide(face, primitive(best->point));
  }
  std::vector<Cone> cones;
  for (const auto& s : sf.simplices) cones.push_back(Cone::from_generators(sf.n, sf.rays_of(s)));
  return Fan::from_maximal_cones(sf.n, std::move(cones));
}

/// Every cone of `fine` lies in some cone of `coarse`.
inline bool refines(const Fan& fine, const Fan& coarse) {
  for (const auto& c : fine.maximal_cones()) {
    bool inside = false;
    for (const auto& d : coarse.maximal_cones())
      if (d.contains_cone(c)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

}  // namespace toric_gfan
