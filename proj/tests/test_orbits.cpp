#include <gtest/gtest.h>

#include <random>

#include "souriau/orbits.hpp"

using namespace souriau;

TEST(Orbits, PlanarSeedIsFixedByTheFullSweep) {
    const auto orbit = orbit_sample(bases::u2() * 1.5, "SO2", 100);
    ASSERT_EQ(orbit.points.size(), 100u);
    EXPECT_LT(orbit.max_spread, 1e-12);
}

TEST(Orbits, SpatialSeedIsFixedByTheAxisSweepAndJ) {
    EXPECT_LT(orbit_sample(bases::Z3() * 2.0, "SO3", 50).max_spread, 1e-12);
    EXPECT_LT(orbit_sample(bases::Z3() * 2.0, "O3", 2).max_spread, 1e-12);
}

TEST(Orbits, GenericSpatialSeedMoves) {
    // Z1 is not fixed by rotation about the z axis
    EXPECT_GT(orbit_sample(bases::Z1(), "SO3", 50).max_spread, 0.5);
    EXPECT_THROW(orbit_sample(bases::u2(), "SO3", 10), std::domain_error);
    EXPECT_THROW(orbit_sample(bases::u2(), "SO2", 0), std::domain_error);
    EXPECT_THROW(orbit_sample(bases::u2(), "SU2", 10), std::domain_error);
}

TEST(Leaves, MembershipIsExactlyThePositiveRay) {
    const auto [ok, x] = leaf_membership(bases::u2() * 3.0, "SO2");
    EXPECT_TRUE(ok);
    EXPECT_DOUBLE_EQ(x, 3.0);
    EXPECT_FALSE(leaf_membership(Mat::zero(2), "SO2").first);            // boundary
    EXPECT_FALSE(leaf_membership(bases::u2() * -1.0, "SO2").first);      // wrong side
    EXPECT_FALSE(leaf_membership(bases::e1(), "SO2").first);             // not on the ray
    EXPECT_TRUE(leaf_membership(bases::Z3() * 0.25, "SO3").first);
    EXPECT_FALSE(leaf_membership(bases::Z1() * 0.25, "SO3").first);
}

TEST(Poisson, KksFormOnSo3Basis) {
    const auto half = PairingConvention::half();
    // <Z3, [Z1, Z2]> = <Z3, Z3> = 1 under s = 1/2
    EXPECT_DOUBLE_EQ(kks_form(bases::Z3(), bases::Z1(), bases::Z2(), half), 1.0);
    EXPECT_DOUBLE_EQ(kks_form(bases::Z3(), bases::Z2(), bases::Z1(), half), -1.0);
    EXPECT_DOUBLE_EQ(kks_form(bases::Z3(), bases::Z1(), bases::Z1(), half), 0.0);
}

TEST(Poisson, LinearFunctionalsBracketThroughStructureConstants) {
    const PoissonEvaluator ev{builtin_algebra("so3"), PairingConvention::half(), std::nullopt};
    const auto f = linear_functional(bases::Z1(), ev.convention);
    const auto g = linear_functional(bases::Z2(), ev.convention);
    EXPECT_NEAR(poisson_bracket(ev, f, g, bases::Z3()), 1.0, 1e-14);
    EXPECT_NEAR(poisson_bracket(ev, f, f, bases::Z3()), 0.0, 0.0);
}

TEST(Poisson, PropertiesOnRandomPointsAndFunctionals) {
    const auto so3 = builtin_algebra("so3");
    const PoissonEvaluator ev{so3, PairingConvention::half(), std::nullopt};
    std::mt19937 rng(0);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto rand_el = [&] {
        return bases::Z1() * dist(rng) + bases::Z2() * dist(rng) + bases::Z3() * dist(rng);
    };
    for (int trial = 0; trial < 100; ++trial) {
        const Mat pt = rand_el();
        const auto f = linear_functional(rand_el(), ev.convention);
        const auto g = linear_functional(rand_el(), ev.convention);
        const auto h = linear_functional(rand_el(), ev.convention);
        // antisymmetry
        EXPECT_NEAR(poisson_bracket(ev, f, g, pt) + poisson_bracket(ev, g, f, pt), 0.0, 1e-12);
        // Leibniz with a finite-difference product
        const ScalarField gh{[&](const Mat& xi) { return g.f(xi) * h.f(xi); }, std::nullopt};
        EXPECT_NEAR(poisson_bracket(ev, f, gh, pt),
                    poisson_bracket(ev, f, g, pt) * h.f(pt) +
                        g.f(pt) * poisson_bracket(ev, f, h, pt),
                    1e-8);
        // Jacobi: {F,{G,H}} + cyclic = 0 using {G,H} as a linear functional
        auto bf = [&](const ScalarField& x, const ScalarField& y) {
            return linear_functional(commutator(*x.gradient, *y.gradient), ev.convention);
        };
        EXPECT_NEAR(poisson_bracket(ev, f, bf(g, h), pt) +
                        poisson_bracket(ev, g, bf(h, f), pt) +
                        poisson_bracket(ev, h, bf(f, g), pt),
                    0.0, 1e-10);
        // Casimir <xi,xi> commutes with everything
        const ScalarField cas{[&](const Mat& xi) { return pairing(xi, xi, ev.convention); },
                              std::nullopt};
        EXPECT_NEAR(poisson_bracket(ev, cas, f, pt), 0.0, 1e-10);
    }
}

TEST(Poisson, AbelianBracketVanishes) {
    const PoissonEvaluator ev{builtin_algebra("so2"), PairingConvention::half(), std::nullopt};
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat pt = bases::u2() * dist(rng);
        const auto f = linear_functional(bases::u2() * dist(rng), ev.convention);
        const auto g = linear_functional(bases::u2() * dist(rng), ev.convention);
        EXPECT_NEAR(poisson_bracket(ev, f, g, pt), 0.0, 1e-14);
    }
}

TEST(Poisson, AffineBracketAddsTheCocycleTerm) {
    const auto so3 = builtin_algebra("so3");
    const TwoCocycle tc{AlgebraCocycle::ad_J(make_group_element(bases::J3(), "O3")),
                        PairingConvention::half()};
    const PoissonEvaluator plain{so3, PairingConvention::half(), std::nullopt};
    const PoissonEvaluator affine{so3, PairingConvention::half(), tc};
    const auto f = linear_functional(bases::Z1(), PairingConvention::half());
    const auto g = linear_functional(bases::Z2(), PairingConvention::half());
    const double diff = poisson_bracket(affine, f, g, bases::Z3()) -
                        poisson_bracket(plain, f, g, bases::Z3());
    EXPECT_NEAR(diff, two_cocycle_eval(tc, bases::Z1(), bases::Z2()), 1e-14);
}
