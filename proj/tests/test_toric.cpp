#include "toric_gfan/oracle.hpp"
#include "toric_gfan/toric.hpp"

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
ToricRingPtr cubic() { return ring_from_dual({vec({1, 0}), vec({1, 3})}); }

ToricPolynomial tp(const ToricRingPtr& r, std::vector<std::pair<V, long>> terms) {
  ToricPolynomial f(r);
  for (auto& [b, c] : terms) f.add_term(b, c);
  return f;
}

Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(Q, n, s); }

Ideal I(std::initializer_list<const char*> gens, std::size_t n) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(g, n));
  return Ideal(Q, n, ps);
}

V random_in_sigma(std::mt19937& rng, const ToricRing& r, int max_coeff = 4) {
  V v(r.rank(), 0);
  for (const auto& ray : r.sigma().rays()) v = add(v, scale(ray, static_cast<long>(rng() % (max_coeff + 1))));
  return v;
}

Polynomial random_poly(std::mt19937& rng, std::size_t n, long max_deg) {
  Polynomial p(Q, n);
  while (p.is_zero()) {
    int t = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < t; ++k) {
      Exponent e(n, 0);
      long d = static_cast<long>(rng() % (max_deg + 1));
      for (long i = 0; i < d; ++i) e[rng() % n] += 1;
      p.add_term(e, static_cast<long>(rng() % 7) - 3);
    }
  }
  return p;
}

}  // namespace

TEST(ToricRing, A1Data) {
  auto r = a1();
  EXPECT_EQ(r->hilbert(), (std::vector<V>{vec({1, 0}), vec({1, 1}), vec({1, 2})}));
  EXPECT_EQ(r->mmatrix(), IntMatrix::from_rows({vec({1, 1, 1}), vec({0, 1, 2})}, 3));
  EXPECT_EQ(r->sigma().rays(), (std::vector<V>{vec({0, 1}), vec({2, -1})}));
}

TEST(ToricRing, Phi) {
  auto r = a1();
  EXPECT_EQ(r->phi(vec({0, 0})), vec({0, 0, 0}));
  EXPECT_EQ(r->phi(vec({0, 1})), vec({0, 1, 2}));
  EXPECT_EQ(r->phi(vec({2, -1})), vec({2, 1, 0}));
  EXPECT_THROW(r->phi(vec({-1, 0})), GeometryError);
  EXPECT_EQ(r->phi_preimage(vec({2, 1, 0})), vec({2, -1}));
  EXPECT_FALSE(r->phi_preimage(vec({1, 0, 0})).has_value());
}

TEST(ToricRing, PhiIsInjectiveOnSamples) {
  std::mt19937 rng(4);
  auto r = cubic();
  std::map<V, V> images;
  for (int t = 0; t < 100; ++t) {
    V v = random_in_sigma(rng, *r);
    auto [it, inserted] = images.emplace(r->phi(v), v);
    if (!inserted) {
      EXPECT_EQ(it->second, v);
    }
  }
}

TEST(ToricIdeal, Examples) {
  auto orthant = ToricRing::make(Cone::from_generators({vec({1, 0}), vec({0, 1})}));
  EXPECT_TRUE(orthant->toric_ideal().is_zero());
  EXPECT_EQ(a1()->toric_ideal(), I({"y1*y3 - y2^2"}, 3));
  auto c = cubic();
  EXPECT_EQ(c->toric_ideal(), I({"y1*y3 - y2^2", "y2*y4 - y3^2", "y1*y4 - y2*y3"}, 4));
  EXPECT_EQ(krull_dimension(c->toric_ideal()), 2);
  for (const auto& g : c->toric_ideal().groebner_basis()) EXPECT_TRUE(psi_apply(c, g).is_zero());
}

TEST(ToricIdeal, KernelOfPsiInThreeDimensions) {
  auto r = ring_from_dual({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 2})});
  const auto& T = r->toric_ideal();
  EXPECT_EQ(krull_dimension(T), 3);
  for (const auto& g : T.groebner_basis()) EXPECT_TRUE(psi_apply(r, g).is_zero());
  // Prime: saturation by the coordinates is a fixed point.
  EXPECT_EQ(saturate_torus(T), T);
}

TEST(Valuation, NuAndInitialForm) {
  auto r = a1();
  auto f = tp(r, {{vec({1, 0}), 1}, {vec({1, 2}), 1}});
  EXPECT_TRUE(nu(vec({0, 1}), ToricPolynomial(r)).infinite);
  EXPECT_EQ(nu(vec({0, 1}), f), Valuation::finite(0));
  EXPECT_EQ(nu(vec({1, 0}), f), Valuation::finite(1));
  EXPECT_EQ(initial_form(vec({0, 1}), f), tp(r, {{vec({1, 0}), 1}}));
  EXPECT_EQ(initial_form(vec({1, 0}), f), f);
  EXPECT_TRUE(initial_form(vec({1, 0}), ToricPolynomial(r)).is_zero());
  EXPECT_THROW(nu(vec({0, -1}), f), GeometryError);
  EXPECT_THROW(tp(r, {{vec({0, 1}), 1}}), GeometryError);
}

TEST(Valuation, InitialFormIsScaleInvariant) {
  std::mt19937 rng(6);
  auto r = cubic();
  for (int t = 0; t < 50; ++t) {
    auto f = psi_apply(r, random_poly(rng, 4, 3));
    V v = random_in_sigma(rng, *r);
    EXPECT_EQ(initial_form(scale(v, 3), f), initial_form(v, f));
  }
}

TEST(Psi, Examples) {
  auto r = a1();
  EXPECT_EQ(psi_apply(r, P("y2", 3)), tp(r, {{vec({1, 1}), 1}}));
  EXPECT_TRUE(psi_apply(r, P("y1*y3 - y2^2", 3)).is_zero());
  EXPECT_EQ(psi_apply(r, P("y1 + y3", 3)), tp(r, {{vec({1, 0}), 1}, {vec({1, 2}), 1}}));
}

TEST(Psi, IsARingHomomorphism) {
  std::mt19937 rng(10);
  auto r = cubic();
  for (int t = 0; t < 40; ++t) {
    auto h1 = random_poly(rng, 4, 3), h2 = random_poly(rng, 4, 3);
    EXPECT_EQ(psi_apply(r, h1 * h2), psi_apply(r, h1) * psi_apply(r, h2));
    EXPECT_EQ(psi_apply(r, h1 + h2), psi_apply(r, h1) + psi_apply(r, h2));
  }
}

TEST(PhiPullback, Examples) {
  auto r = a1();
  auto orthant = Cone::from_generators(IntMatrix::identity(3).row_list());
  EXPECT_EQ(r->phi_pullback(orthant), r->sigma());
  // {w1 <= w3, w2 <= w3} and its mirror image, inside the orthant.
  auto c1 = Cone::from_inequalities(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({-1, 0, 1}), vec({0, -1, 1})});
  EXPECT_EQ(r->phi_pullback(c1), Cone::from_generators({vec({0, 1}), vec({1, 0})}));
  auto c2 = Cone::from_inequalities(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 0, -1}), vec({1, -1, 0})});
  EXPECT_EQ(r->phi_pullback(c2), Cone::from_generators({vec({1, 0}), vec({2, -1})}));
  auto pulled = r->phi_pullback(c1);
  EXPECT_TRUE(c1.contains(r->phi(pulled.relative_interior_point())) != Containment::outside);
}

TEST(LiftIdeal, Examples) {
  auto r = a1();
  EXPECT_EQ(lift_ideal(ToricIdealSpec(r, {})), r->toric_ideal());
  auto J = ToricIdealSpec(r, {tp(r, {{vec({1, 0}), 1}, {vec({1, 2}), 1}})});
  EXPECT_EQ(lift_ideal(J), I({"y1 + y3", "y1*y3 - y2^2"}, 3));
  EXPECT_EQ(lift_ideal(ToricIdealSpec(r, {tp(r, {{vec({1, 1}), 1}})})), I({"y2", "y1*y3 - y2^2"}, 3));
}

TEST(LiftIdeal, MonomialLiftsReproduceTheExponent) {
  auto r = ring_from_dual({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 2})});
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b)
      for (long c = 0; c < 6; ++c) {
        V beta = vec({a, b, c});
        if (!r->sigma_dual().contains_point(beta)) continue;
        Exponent g = r->lift_monomial(beta);
        for (long x : g) EXPECT_GE(x, 0);
        EXPECT_EQ(r->image(g), beta);
      }
}

TEST(ToricInitialIdeal, Examples) {
  auto r = a1();
  auto J = ToricIdealSpec(r, {tp(r, {{vec({1, 0}), 1}, {vec({1, 2}), 1}})});
  auto in1 = toric_initial_ideal(J, vec({0, 1}));
  EXPECT_TRUE(toric_ideal_equal(in1, ToricIdealSpec(r, {tp(r, {{vec({1, 0}), 1}}), tp(r, {{vec({2, 2}), 1}})})));
  EXPECT_TRUE(toric_ideal_equal(toric_initial_ideal(J, vec({1, 0})), J));
  auto in3 = toric_initial_ideal(J, vec({2, -1}));
  EXPECT_TRUE(toric_ideal_equal(in3, ToricIdealSpec(r, {tp(r, {{vec({1, 2}), 1}}), tp(r, {{vec({2, 2}), 1}})})));
  EXPECT_FALSE(toric_ideal_equal(in1, in3));
}

TEST(ToricInitialIdeal, ScaleInvariant) {
  std::mt19937 rng(12);
  auto r = cubic();
  for (int t = 0; t < 10; ++t) {
    auto J = ToricIdealSpec(r, {psi_apply(r, random_poly(rng, 4, 2))});
    V v = random_in_sigma(rng, *r);
    EXPECT_TRUE(toric_ideal_equal(toric_initial_ideal(J, v), toric_initial_ideal(J, scale(v, 2))));
  }
}

TEST(ToricInitialIdeal, AgreesWithToricSideBruteForce) {
  std::mt19937 rng(13);
  auto r = a1();
  auto J = ToricIdealSpec(r, {tp(r, {{vec({1, 0}), 1}, {vec({1, 2}), 1}})});
  for (int t = 0; t < 8; ++t) {
    V v = random_in_sigma(rng, *r, 3);
    auto cmp = oracle::compare_toric_initial_ideal(J, v, toric_initial_ideal(J, v), 6);
    EXPECT_TRUE(cmp.forms_in_candidate) << to_string(v);
    EXPECT_TRUE(cmp.candidate_in_forms) << to_string(v);
  }
}

TEST(MaxWeightLift, Examples) {
  auto r = a1();
  auto f = tp(r, {{vec({1, 0}), 1}, {vec({1, 2}), 1}});
  auto m1 = max_weight_lift(f, vec({0, 1}), P("y1 + y3", 3));
  EXPECT_EQ(m1.lift, P("y1 + y3", 3));
  EXPECT_EQ(m1.steps, 0u);

  auto g = tp(r, {{vec({4, 0}), 1}});
  auto m2 = max_weight_lift(g, vec({1, 0}), P("y1*y3 - y2^2 + y1^4", 3));
  EXPECT_EQ(m2.lift, P("y1^4", 3));
  EXPECT_EQ(m2.steps, 1u);
  EXPECT_EQ(*weight_valuation(m2.lift, r->phi_weight(vec({1, 0}))), 4);

  auto m3 = max_weight_lift(tp(r, {{vec({1, 1}), 1}}), vec({3, -1}));
  EXPECT_EQ(m3.lift, P("y2", 3));
  EXPECT_EQ(*weight_valuation(m3.lift, r->phi_weight(vec({3, -1}))), 2);
  EXPECT_THROW(max_weight_lift(ToricPolynomial(r), vec({1, 0})), AlgebraError);
}

TEST(MaxWeightLift, ReachesTheValuationAndTransfersInitialForms) {
  std::mt19937 rng(14);
  auto r = cubic();
  const auto& T = r->toric_ideal().generators();
  for (int t = 0; t < 40; ++t) {
    Polynomial h = random_poly(rng, 4, 3);
    auto f = psi_apply(r, h);
    if (f.is_zero()) continue;
    // Start from a deliberately poor lift.
    Polynomial start = h + T[rng() % T.size()] * random_poly(rng, 4, 1);
    V v = random_in_sigma(rng, *r);
    auto w = r->phi_weight(v);
    auto m = max_weight_lift(f, v, start);
    EXPECT_EQ(psi_apply(r, m.lift), f);
    EXPECT_EQ(Valuation::finite(*weight_valuation(m.lift, w)), nu(v, f));
    EXPECT_EQ(psi_apply(r, initial_form(m.lift, w)), initial_form(v, f));
  }
}

TEST(WeightTransfer, MonomialIdentity) {
  std::mt19937 rng(15);
  auto r = ring_from_dual({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 2})});
  for (int t = 0; t < 100; ++t) {
    Exponent g(r->num_vars(), 0);
    for (auto& x : g) x = static_cast<long>(rng() % 3);
    V v = random_in_sigma(rng, *r);
    Polynomial mono = Polynomial::monomial(Q, g);
    EXPECT_EQ(Valuation::finite(*weight_valuation(mono, r->phi_weight(v))), nu(v, psi_apply(r, mono)));
  }
}

TEST(WeightTransfer, ValuationInequalityAndStrictness) {
  std::mt19937 rng(16);
  auto r = a1();
  for (int t = 0; t < 100; ++t) {
    Polynomial h = random_poly(rng, 3, 3);
    if (t % 2) h += r->toric_ideal().generators().front() * random_poly(rng, 3, 1);
    V v = random_in_sigma(rng, *r);
    auto w = r->phi_weight(v);
    auto f = psi_apply(r, h);
    Valuation lhs = Valuation::finite(*weight_valuation(h, w));
    Valuation rhs = nu(v, f);
    EXPECT_TRUE(lhs <= rhs);
    bool killed = psi_apply(r, initial_form(h, w)).is_zero();
    EXPECT_EQ(lhs < rhs, killed);
  }
}

TEST(Tropical, Examples) {
  auto r = a1();
  EXPECT_TRUE(trop_membership(r->toric_ideal(), {0, 1, 2}));
  EXPECT_FALSE(trop_membership(r->toric_ideal(), {1, 0, 0}));
  EXPECT_TRUE(trop_membership(Ideal::zero(Q, 3), {5, 0, 1}));
}

TEST(Tropical, ToricIdealIsFixedOnTheImageOfSigma) {
  std::mt19937 rng(17);
  for (auto r : {a1(), cubic()}) {
    for (int t = 0; t < 15; ++t) {
      V v = random_in_sigma(rng, *r);
      EXPECT_EQ(initial_ideal(r->toric_ideal(), r->phi_weight(v)), r->toric_ideal());
    }
  }
}

TEST(Tropical, TropicalVarietyOfToricIdealIsImageOfSigma) {
  std::mt19937 rng(18);
  for (auto r : {a1(), cubic()}) {
    int inside = 0;
    for (int t = 0; t < 60; ++t) {
      V w(r->num_vars());
      if (t % 3 == 0) {
        w = r->phi(random_in_sigma(rng, *r));
      } else {
        for (auto& x : w) x = static_cast<long>(rng() % 4);
      }
      bool member = r->phi_preimage(w).has_value();
      inside += member;
      EXPECT_EQ(trop_membership(r->toric_ideal(), to_weight(w)), member) << to_string(w);
    }
    EXPECT_GT(inside, 0);
  }
}
