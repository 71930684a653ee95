#include "toric_gfan/fan.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace toric_gfan;

namespace {

LatticeVector v(std::initializer_list<long> xs) { return make_vector(xs); }

Cone cone(std::initializer_list<std::initializer_list<long>> rays) {
  std::vector<LatticeVector> g;
  for (auto r : rays) g.push_back(make_vector(r));
  return Cone::from_generators(std::move(g));
}

// Is p a nonnegative integer combination of `gens`? Bounded recursive search.
bool in_semigroup(const LatticeVector& p, const std::vector<LatticeVector>& gens, const LatticeVector& weight,
                  std::size_t from = 0) {
  if (is_zero(p)) return true;
  for (std::size_t i = from; i < gens.size(); ++i) {
    LatticeVector rest = subtract(p, gens[i]);
    if (dot(weight, rest) < 0) continue;
    if (in_semigroup(rest, gens, weight, i)) return true;
  }
  return false;
}

std::vector<LatticeVector> box_points(std::size_t n, long bound) {
  std::vector<LatticeVector> out;
  LatticeVector x(n, Integer(-bound));
  while (true) {
    out.push_back(x);
    std::size_t j = 0;
    while (j < n && x[j] == bound) x[j++] = -bound;
    if (j == n) break;
    x[j] += 1;
  }
  return out;
}

Cone random_cone_2d(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-6, 6);
  while (true) {
    LatticeVector a{e(rng), e(rng)}, b{e(rng), e(rng)};
    if (is_zero(a) || is_zero(b)) continue;
    Integer det = a[0] * b[1] - a[1] * b[0];
    if (det == 0) continue;
    return Cone::from_generators(2, {a, b});
  }
}

}  // namespace

TEST(Cone, CanonicalFormDropsRedundantAndNonPrimitiveGenerators) {
  Cone c = Cone::from_generators(2, {v({2, 0}), v({1, 1}), v({0, 3}), v({1, 2})});
  EXPECT_EQ(c.rays(), (std::vector<LatticeVector>{v({0, 1}), v({1, 0})}));
  EXPECT_EQ(c.dim(), 2u);
}

TEST(Cone, RejectsNonPointedGenerators) {
  EXPECT_THROW(Cone::from_generators(2, {v({1, 0}), v({-1, 0})}), GeometryError);
}

TEST(DualCone, OrthantIsSelfDual) { EXPECT_EQ(dual_cone(cone({{1, 0}, {0, 1}})), cone({{1, 0}, {0, 1}})); }

TEST(DualCone, Examples) {
  EXPECT_EQ(dual_cone(cone({{0, 1}, {2, -1}})), cone({{1, 0}, {1, 2}}));
  EXPECT_EQ(dual_cone(cone({{1, 0}, {1, 3}})), cone({{0, 1}, {3, -1}}));
}

TEST(DualCone, RejectsLowerDimensionalInput) { EXPECT_THROW(dual_cone(cone({{1, 1}})), GeometryError); }

TEST(DualCone, IsAnInvolution) {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    Cone c = random_cone_2d(rng);
    EXPECT_EQ(dual_cone(dual_cone(c)), c);
  }
  std::uniform_int_distribution<int> e(-3, 3);
  int checked = 0;
  while (checked < 20) {
    std::vector<LatticeVector> g(4, LatticeVector(3));
    for (auto& r : g)
      for (auto& x : r) x = e(rng);
    try {
      Cone c = Cone::from_generators(3, g);
      if (!c.is_full_dimensional()) continue;
      EXPECT_EQ(dual_cone(dual_cone(c)), c);
      ++checked;
    } catch (const GeometryError&) {
    }
  }
}

TEST(HilbertBasis, Examples) {
  EXPECT_EQ(hilbert_basis(cone({{1, 0}, {0, 1}})), (std::vector<LatticeVector>{v({0, 1}), v({1, 0})}));
  EXPECT_EQ(hilbert_basis(cone({{1, 0}, {1, 2}})), (std::vector<LatticeVector>{v({1, 0}), v({1, 1}), v({1, 2})}));
  EXPECT_EQ(hilbert_basis(cone({{1, 0}, {1, 3}})),
            (std::vector<LatticeVector>{v({1, 0}), v({1, 1}), v({1, 2}), v({1, 3})}));
}

TEST(HilbertBasis, EnumerationOracleGeneratesAndIsMinimal) {
  std::mt19937 rng(9);
  std::vector<Cone> cones = {cone({{1, 0}, {1, 2}}), cone({{1, 0}, {2, 5}}), cone({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}),
                             cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}})};
  for (int i = 0; i < 6; ++i) cones.push_back(random_cone_2d(rng));
  for (const auto& c : cones) {
    auto H = hilbert_basis(c);
    const std::size_t n = c.ambient_rank();
    // Strictly positive grading on c, used to bound the search.
    LatticeVector weight = dual_cone(c).relative_interior_point();
    int tested = 0;
    for (const auto& p : box_points(n, n == 2 ? 8 : 4)) {
      if (!c.contains_point(p)) continue;
      ASSERT_TRUE(in_semigroup(p, H, weight)) << to_string(p) << " in " << c.to_string();
      ++tested;
    }
    EXPECT_GT(tested, 5);
    for (const auto& h : H) {
      ASSERT_TRUE(c.contains_point(h));
      // h = a + b with a, b nonzero lattice points of c would force a in the box below h.
      for (const auto& a : box_points(n, 12)) {
        if (is_zero(a) || a == h || !c.contains_point(a)) continue;
        if (dot(weight, a) >= dot(weight, h)) continue;
        ASSERT_FALSE(c.contains_point(subtract(h, a))) << to_string(h) << " decomposes";
      }
    }
  }
}

TEST(Contains, Examples) {
  EXPECT_EQ(contains(cone({{1, 0}, {0, 1}}), v({1, 1})), Containment::relative_interior);
  EXPECT_EQ(contains(cone({{0, 1}, {2, -1}}), v({1, 0})), Containment::relative_interior);
  EXPECT_EQ(contains(cone({{0, 1}, {2, -1}}), v({2, -1})), Containment::boundary);
  EXPECT_EQ(contains(cone({{0, 1}, {2, -1}}), v({-1, 0})), Containment::outside);
  EXPECT_EQ(contains(cone({{1, 1}}), v({2, 2})), Containment::relative_interior);
  EXPECT_EQ(contains(cone({{1, 1}}), v({2, 1})), Containment::outside);
}

TEST(RelativeInteriorPoint, SumOfRays) {
  EXPECT_EQ(relative_interior_point(cone({{1, 0}})), v({1, 0}));
  EXPECT_EQ(relative_interior_point(cone({{0, 1}, {2, -1}})), v({2, 0}));
  Cone c = Cone::from_generators(2, {v({1, 0}), v({1, 1}), v({0, 1})});
  EXPECT_EQ(contains(c, relative_interior_point(c)), Containment::relative_interior);
  EXPECT_THROW(relative_interior_point(Cone::zero(2)), GeometryError);
}

TEST(Smooth, Examples) {
  EXPECT_TRUE(is_smooth(cone({{1, 0}, {0, 1}})));
  EXPECT_FALSE(is_smooth(cone({{0, 1}, {2, -1}})));
  EXPECT_TRUE(is_smooth(cone({{1, 0}, {1, 1}})));
  EXPECT_FALSE(is_smooth(cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}})));
}

TEST(Faces, SquareConeHasNineFaces) {
  Cone c = cone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  auto f = c.faces();
  EXPECT_EQ(f.size(), 1u + 4u + 4u + 1u);
  EXPECT_EQ(f.front(), Cone::zero(3));
  EXPECT_EQ(f.back(), c);
}

TEST(CommonRefinement, Idempotent) {
  Fan f = Fan::from_maximal_cones(2, {cone({{1, 0}, {1, 1}}), cone({{1, 1}, {0, 1}})});
  EXPECT_EQ(common_refinement(f, f), f);
}

TEST(CommonRefinement, HalvesRefineTheCoarseFan) {
  Cone sigma = cone({{0, 1}, {2, -1}});
  Fan halves = Fan::from_maximal_cones(2, {cone({{0, 1}, {1, 0}}), cone({{1, 0}, {2, -1}})});
  EXPECT_EQ(common_refinement(halves, Fan::single_cone(sigma)), halves);
}

TEST(CommonRefinement, TwoSubdivisionsOfTheOrthant) {
  Fan a = Fan::from_maximal_cones(2, {cone({{1, 0}, {1, 1}}), cone({{1, 1}, {0, 1}})});
  Fan b = Fan::from_maximal_cones(2, {cone({{1, 0}, {1, 2}}), cone({{1, 2}, {0, 1}})});
  Fan r = common_refinement(a, b);
  EXPECT_EQ(r.maximal_cones().size(), 3u);
  EXPECT_TRUE(check_fan(r, cone({{1, 0}, {0, 1}})).ok);
  EXPECT_TRUE(refines(r, a));
  EXPECT_TRUE(refines(r, b));
}

TEST(CommonRefinement, MismatchedSupportIsRejected) {
  Fan a = Fan::single_cone(cone({{1, 0}, {0, 1}}));
  Fan b = Fan::single_cone(cone({{1, 0}, {1, 1}}));
  EXPECT_THROW(common_refinement(a, b), GeometryError);
}

TEST(FanCheck, DetectsOverlapAndGaps) {
  Cone orthant = cone({{1, 0}, {0, 1}});
  Fan overlap = Fan::from_maximal_cones(2, {cone({{1, 0}, {1, 2}}), cone({{1, 1}, {0, 1}})});
  EXPECT_FALSE(check_fan(overlap, orthant).ok);
  Fan gap = Fan::from_maximal_cones(2, {cone({{1, 0}, {1, 1}}), cone({{1, 2}, {0, 1}})});
  EXPECT_FALSE(check_fan(gap, orthant).ok);
  Fan good = Fan::from_maximal_cones(2, {cone({{1, 0}, {1, 1}}), cone({{1, 1}, {0, 1}})});
  EXPECT_TRUE(check_fan(good, orthant).ok);
}

TEST(Regularize, SmoothFanUnchanged) {
  Fan f = Fan::from_maximal_cones(2, {cone({{1, 0}, {1, 1}}), cone({{1, 1}, {0, 1}})});
  EXPECT_EQ(regularize(f), f);
}

TEST(Regularize, IndexTwoCones) {
  Fan r = regularize(Fan::single_cone(cone({{0, 1}, {2, -1}})));
  EXPECT_EQ(r, Fan::from_maximal_cones(2, {cone({{0, 1}, {1, 0}}), cone({{1, 0}, {2, -1}})}));
  Fan r2 = regularize(Fan::single_cone(cone({{1, 0}, {1, 2}})));
  EXPECT_EQ(r2, Fan::from_maximal_cones(2, {cone({{1, 0}, {1, 1}}), cone({{1, 1}, {1, 2}})}));
}

TEST(Regularize, RandomConesBecomeSmoothRefinements) {
  std::mt19937 rng(21);
  for (int i = 0; i < 25; ++i) {
    Cone c = random_cone_2d(rng);
    Fan input = Fan::single_cone(c);
    Fan r = regularize(input);
    ASSERT_TRUE(r.is_smooth()) << c.to_string();
    ASSERT_TRUE(refines(r, input));
    ASSERT_TRUE(check_fan(r, c).ok) << check_fan(r, c).failure;
    for (const auto& ray : c.rays())
      ASSERT_TRUE(std::binary_search(r.rays().begin(), r.rays().end(), ray));
  }
}

TEST(Regularize, ThreeDimensionalNonSimplicialCone) {
  Cone c = cone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  Fan r = regularize(Fan::single_cone(c));
  EXPECT_TRUE(r.is_smooth());
  auto check = check_fan(r, c);
  EXPECT_TRUE(check.ok) << check.failure;
}

TEST(PlacingTriangulation, CoversTheCone) {
  Cone c = cone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, 1, 2}});
  auto simplices = placing_triangulation(3, c.rays());
  std::vector<Cone> pieces;
  for (const auto& s : simplices) {
    std::vector<LatticeVector> rs;
    for (auto i : s) rs.push_back(c.rays()[i]);
    pieces.push_back(Cone::from_generators(3, rs));
    EXPECT_TRUE(is_simplicial(pieces.back()));
  }
  auto check = check_fan(Fan::from_maximal_cones(3, pieces), c);
  EXPECT_TRUE(check.ok) << check.failure;
}
