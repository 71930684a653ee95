#include "toric_gfan/gfan.hpp"
#include "toric_gfan/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric_gfan;

namespace {

using V = LatticeVector;
const Field Q = Field::rationals();

V vec(std::initializer_list<long> xs) { return make_vector(xs); }

ToricRingPtr ring_from_dual(std::vector<V> dual_rays) {
  return ToricRing::make(dual_cone(Cone::from_generators(std::move(dual_rays))));
}

ToricRingPtr a1() { return ring_from_dual({vec({1, 0}), vec({1, 2})}); }

ToricPolynomial tp(const ToricRingPtr& r, std::vector<std::pair<V, long>> terms) {
  ToricPolynomial f(r);
  for (auto& [b, c] : terms) f.add_term(b, c);
  return f;
}

Ideal I(std::initializer_list<const char*> gens, std::size_t n) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(Q, n, g));
  return Ideal(Q, n, ps);
}

V random_in_sigma(std::mt19937& rng, const ToricRing& r, int max_coeff = 5) {
  V v(r.rank(), 0);
  for (const auto& ray : r.sigma().rays()) v = add(v, scale(ray, static_cast<long>(rng() % (max_coeff + 1))));
  return v;
}

/// A random element of R with up to `terms` terms, exponents small Hilbert-basis sums.
ToricPolynomial random_element(std::mt19937& rng, const ToricRingPtr& r, int terms, int max_deg) {
  ToricPolynomial f(r);
  while (f.is_zero()) {
    for (int k = 0; k < terms; ++k) {
      V beta(r->rank(), 0);
      int d = 1 + static_cast<int>(rng() % max_deg);
      for (int i = 0; i < d; ++i) beta = add(beta, r->hilbert()[rng() % r->num_vars()]);
      f.add_term(beta, 1 + static_cast<long>(rng() % 3));
    }
  }
  return f;
}

/// Every exhaustive cell sits inside the traversal chamber with the same key,
/// and both produce the same set of keys.
void expect_matches_oracle(const RestrictedGroebnerFan& gf) {
  auto cells = oracle::exhaustive_cells(gf.ideal);
  std::set<std::string> oracle_keys, fan_keys;
  for (const auto& ch : gf.chambers) fan_keys.insert(ch.key);
  for (const auto& cell : cells) {
    oracle_keys.insert(cell.key);
    bool placed = false;
    for (const auto& ch : gf.chambers)
      if (ch.key == cell.key) {
        EXPECT_TRUE(ch.cone.contains_cone(cell.cone)) << cell.cone.to_string() << " vs " << ch.cone.to_string();
        placed = true;
      }
    EXPECT_TRUE(placed) << "cell " << cell.cone.to_string() << " has key " << cell.key;
  }
  EXPECT_EQ(oracle_keys, fan_keys);
}

void expect_sampling_consistent(const RestrictedGroebnerFan& gf, std::mt19937& rng, int samples) {
  const auto& ring = *gf.ideal.ring;
  for (int t = 0; t < samples; ++t) {
    V v = random_in_sigma(rng, ring, 6);
    auto carrier = gf.fan.carrier(v);
    ASSERT_TRUE(carrier.has_value()) << to_string(v);
    auto expected = toric_initial_ideal(gf.ideal, v);
    ASSERT_TRUE(toric_ideal_equal(gf.payload(*carrier), expected)) << to_string(v);
    if (carrier->is_full_dimensional()) {
      ASSERT_TRUE(ideal_equal(gf.chamber_of(*carrier).initial, initial_ideal(gf.lifted, ring.phi_weight(v))));
    }
  }
}

void expect_valid_fan(const RestrictedGroebnerFan& gf) {
  auto check = check_fan(gf.fan, gf.ideal.ring->sigma());
  EXPECT_TRUE(check.ok) << check.failure;
  std::set<std::string> keys;
  for (const auto& ch : gf.chambers) keys.insert(ch.key);
  EXPECT_EQ(keys.size(), gf.chambers.size());
  EXPECT_EQ(gf.chambers.size(), gf.fan.maximal_cones().size());
}

}  // namespace

TEST(GroebnerCone, MonomialGivesOrthant) {
  auto c = groebner_cone(I({"y1"}, 3), {2, 0, 1});
  EXPECT_EQ(c, Cone::from_generators(IntMatrix::identity(3).row_list()));
}

TEST(GroebnerCone, Examples) {
  Ideal J = I({"y1 + y3", "y1*y3 - y2^2"}, 3);
  auto c1 = groebner_cone(J, {0, 1, 2});
  auto e1 = Cone::from_inequalities(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({-1, 0, 1}), vec({0, -2, 2})});
  EXPECT_EQ(c1, e1);
  auto c2 = groebner_cone(J, {2, 1, 0});
  auto e2 = Cone::from_inequalities(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 0, -1}), vec({2, -2, 0})});
  EXPECT_EQ(c2, e2);
}

TEST(GroebnerCone, RelativeInteriorHasTheSameInitialIdeal) {
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    std::size_t n = 3;
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) {
      Polynomial p(Q, n);
      for (int k = 0; k < 3; ++k) {
        Exponent e(n, 0);
        for (int d = 0; d < 1 + static_cast<int>(rng() % 3); ++d) e[rng() % n] += 1;
        p.add_term(e, 1 + static_cast<long>(rng() % 3));
      }
      gens.push_back(p);
    }
    Ideal J(Q, n, gens);
    std::vector<long> w(n);
    for (auto& x : w) x = static_cast<long>(rng() % 4);
    Cone c = groebner_cone(J, w);
    EXPECT_NE(c.contains(to_lattice(w)), Containment::outside);
    if (c.is_zero_cone()) continue;
    auto in = initial_ideal(J, w);
    // Random interior points: positive combinations of all rays.
    for (int k = 0; k < 3; ++k) {
      V p(n, 0);
      for (const auto& r : c.rays()) p = add(p, scale(r, 1 + static_cast<long>(rng() % 4)));
      ASSERT_EQ(c.contains(p), Containment::relative_interior);
      EXPECT_EQ(initial_ideal(J, to_weight(p)), in) << J.to_string();
    }
  }
}

TEST(RestrictedFan, A1TwoTermExample) {
  auto r = a1();
  ToricIdealSpec J(r, {tp(r, {{vec({1, 0}), 1}, {vec({1, 2}), 1}})});
  auto gf = restricted_groebner_fan(J);
  expect_valid_fan(gf);
  ASSERT_EQ(gf.fan.maximal_cones().size(), 2u);
  EXPECT_EQ(gf.fan.rays(), (std::vector<V>{vec({0, 1}), vec({1, 0}), vec({2, -1})}));
  EXPECT_EQ(gf.fan.maximal_cones()[0], Cone::from_generators({vec({0, 1}), vec({1, 0})}));
  EXPECT_EQ(gf.fan.maximal_cones()[1], Cone::from_generators({vec({1, 0}), vec({2, -1})}));
  std::mt19937 rng(1);
  expect_sampling_consistent(gf, rng, 200);
  expect_matches_oracle(gf);
}

TEST(RestrictedFan, A1ThreeTermExample) {
  auto r = a1();
  ToricIdealSpec J(r, {tp(r, {{vec({1, 0}), 1}, {vec({1, 1}), 1}, {vec({1, 2}), 1}})});
  auto gf = restricted_groebner_fan(J);
  expect_valid_fan(gf);
  ASSERT_EQ(gf.fan.maximal_cones().size(), 2u);
  EXPECT_EQ(gf.fan.maximal_cones()[0], Cone::from_generators({vec({0, 1}), vec({1, 0})}));
  EXPECT_EQ(gf.fan.maximal_cones()[1], Cone::from_generators({vec({1, 0}), vec({2, -1})}));
  expect_matches_oracle(gf);
}

TEST(RestrictedFan, MonomialIdealHasOneClass) {
  auto r = a1();
  ToricIdealSpec J(r, {tp(r, {{vec({1, 1}), 1}}), tp(r, {{vec({2, 0}), 1}})});
  auto gf = restricted_groebner_fan(J);
  expect_valid_fan(gf);
  ASSERT_EQ(gf.fan.maximal_cones().size(), 1u);
  EXPECT_EQ(gf.fan.maximal_cones()[0], r->sigma());
}

TEST(RestrictedFan, ZeroAndUnitIdealsHaveOneClass) {
  auto r = a1();
  auto zero = restricted_groebner_fan(ToricIdealSpec(r, {}));
  EXPECT_EQ(zero.fan.maximal_cones().size(), 1u);
  auto unit = restricted_groebner_fan(ToricIdealSpec(r, {tp(r, {{vec({0, 0}), 1}})}));
  EXPECT_EQ(unit.fan.maximal_cones().size(), 1u);
}

TEST(RestrictedFan, RandomIdealsInPlaneCones) {
  std::mt19937 rng(41);
  std::vector<ToricRingPtr> rings{a1(), ring_from_dual({vec({1, 0}), vec({1, 3})}),
                                  ring_from_dual({vec({1, 0}), vec({0, 1})}),
                                  ring_from_dual({vec({2, -1}), vec({-1, 2})})};
  for (const auto& r : rings)
    for (int t = 0; t < 3; ++t) {
      std::vector<ToricPolynomial> gens{random_element(rng, r, 3, 2)};
      if (rng() % 2) gens.push_back(random_element(rng, r, 2, 2));
      ToricIdealSpec J(r, gens);
      auto gf = restricted_groebner_fan(J);
      expect_valid_fan(gf);
      expect_sampling_consistent(gf, rng, 40);
      expect_matches_oracle(gf);
    }
}

TEST(RestrictedFan, SpaceCones) {
  std::mt19937 rng(43);
  std::vector<ToricRingPtr> rings{ring_from_dual({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}),
                                  ring_from_dual({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 2})})};
  for (const auto& r : rings)
    for (int t = 0; t < 2; ++t) {
      ToricIdealSpec J(r, {random_element(rng, r, 3, 2)});
      auto gf = restricted_groebner_fan(J);
      expect_valid_fan(gf);
      expect_sampling_consistent(gf, rng, 30);
      expect_matches_oracle(gf);
    }
}

TEST(SameClass, Examples) {
  auto r = a1();
  ToricIdealSpec J(r, {tp(r, {{vec({1, 0}), 1}, {vec({1, 2}), 1}})});
  EXPECT_TRUE(same_class(J, vec({0, 1}), vec({0, 1})));
  EXPECT_TRUE(same_class(J, vec({0, 1}), vec({1, 1})));
  EXPECT_FALSE(same_class(J, vec({0, 1}), vec({2, -1})));
}

TEST(SameClass, AgreesWithFanMembershipAndInitialIdeals) {
  std::mt19937 rng(47);
  auto r = ring_from_dual({vec({1, 0}), vec({1, 3})});
  ToricIdealSpec J(r, {random_element(rng, r, 3, 2)});
  auto gf = restricted_groebner_fan(J);
  for (int t = 0; t < 50; ++t) {
    V v1 = random_in_sigma(rng, *r), v2 = random_in_sigma(rng, *r);
    if (t % 5 == 0) v2 = scale(v1, 2);
    bool same = same_class(J, v1, v2);
    EXPECT_EQ(same, toric_ideal_equal(toric_initial_ideal(J, v1), toric_initial_ideal(J, v2)));
    auto c1 = gf.fan.carrier(v1), c2 = gf.fan.carrier(v2);
    ASSERT_TRUE(c1 && c2);
    if (*c1 == *c2) {
      EXPECT_TRUE(same);
    }
    if (same && c1->is_full_dimensional() && c2->is_full_dimensional()) {
      EXPECT_EQ(*c1, *c2);
    }
  }
}
