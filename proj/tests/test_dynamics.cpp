#include <gtest/gtest.h>

#include "souriau/dynamics.hpp"

using namespace souriau;

TEST(GradientFlow, FieldAndConsistency) {
    const auto beta = cone_element("so2", 2.0);
    EXPECT_NEAR((gradient_field(beta) + beta.matrix).max_abs(), 0.0, 0.0);
    EXPECT_LT(gradient_field_consistency(beta), 1e-8);
}

TEST(GradientFlow, ExactSolution) {
    const auto traj = integrate_gradient(1.0, 5.0, 0.001, FlowMethod::exact);
    ASSERT_EQ(traj.times.size(), 5001u);
    EXPECT_DOUBLE_EQ(traj.a_values.front(), 1.0);
    EXPECT_NEAR(traj.a_values.back(), std::exp(-5.0), 1e-15);
    EXPECT_EQ(traj.method, "exact");
    EXPECT_DOUBLE_EQ(traj.beta_at(0)(1, 0), 1.0);
}

TEST(GradientFlow, DegenerateHorizonGivesSingleSample) {
    const auto traj = integrate_gradient(1.0, 0.0, 0.001, FlowMethod::rk4);
    ASSERT_EQ(traj.times.size(), 1u);
    EXPECT_DOUBLE_EQ(traj.a_values[0], 1.0);
}

TEST(GradientFlow, InvalidArguments) {
    EXPECT_THROW(integrate_gradient(-1.0, 1.0, 0.1, FlowMethod::rk4), std::domain_error);
    EXPECT_THROW(integrate_gradient(1.0, 1.0, 0.0, FlowMethod::rk4), std::domain_error);
    EXPECT_THROW(integrate_gradient(1.0, 1.0, 2.0, FlowMethod::rk4), std::domain_error);
}

TEST(GradientFlow, Rk4MatchesExactAndConverges) {
    auto max_err = [](double dt) {
        const auto traj = integrate_gradient(1.0, 5.0, dt, FlowMethod::rk4);
        double e = 0;
        for (size_t i = 0; i < traj.times.size(); ++i)
            e = std::max(e, std::abs(traj.a_values[i] - std::exp(-traj.times[i])));
        return e;
    };
    EXPECT_LT(max_err(1e-3), 1e-8);
    // fourth order: halving the step at dt = 0.1 cuts the error ~16x
    EXPECT_GE(max_err(0.1) / max_err(0.05), 14.0);
}

TEST(GradientFlow, SpatialReductionMatchesPlanar) {
    const auto p = integrate_gradient(1.0, 5.0, 1e-3, FlowMethod::rk4, "so2");
    const auto s = integrate_gradient(1.0, 5.0, 1e-3, FlowMethod::rk4, "so3");
    ASSERT_EQ(p.a_values.size(), s.a_values.size());
    for (size_t i = 0; i < p.a_values.size(); ++i)
        EXPECT_DOUBLE_EQ(p.a_values[i], s.a_values[i]);
    EXPECT_EQ(s.beta_at(0).dim(), 3);
}

TEST(HamiltonianFlow, EnergyStartsAtMinusOneAndIsConserved) {
    const auto beta = cone_element("so2", 1.0);
    const auto [traj, drift] = hamiltonian_flow(beta, EtaConvention::grad_phi(), 10.0, 1e-3);
    EXPECT_NEAR(traj.states.front().H, -1.0, 1e-12);
    EXPECT_LT(drift, 1e-10);
    // P decays, Q grows, the pairing stays put
    const auto& last = traj.states.back();
    EXPECT_NEAR(last.P(1, 0), std::exp(-10.0), 1e-8);
    EXPECT_NEAR(last.Q(1, 0), std::exp(10.0), 1e-6 * std::exp(10.0));
}

TEST(HamiltonianFlow, RequiresGradPhiConvention) {
    const auto beta = cone_element("so2", 1.0);
    EXPECT_THROW(hamiltonian_flow(beta, EtaConvention::minus_beta(), 1.0, 1e-3),
                 std::domain_error);
}

TEST(Lax, ResidualIsExactlyTwiceTheInitialCoordinate) {
    // independently derived: L-dot - [L,N] = [[0, +-2a],[0,0]], so the
    // Frobenius residual along a(t) = a0 e^{-t} peaks at t = 0 with value 2 a0
    for (double a0 : {0.5, 1.0, 2.0}) {
        const auto traj = integrate_gradient(a0, 1.0, 1e-3, FlowMethod::exact);
        for (const auto variant : {LaxPair::Variant::nominal, LaxPair::Variant::symmetric}) {
            const LaxPair pair{variant};
            const auto d = lax_residual(pair, traj);
            EXPECT_NEAR(d.residual_max, 2.0 * a0, 1e-12) << "a0=" << a0;
            EXPECT_NEAR(d.spectrum_drift, a0 * (1.0 - std::exp(-1.0)), 1e-10);
        }
    }
}

TEST(Lax, PointwiseResidualMatrix) {
    const LaxPair nominal{LaxPair::Variant::nominal};
    const double a = 0.7;
    const Mat res = nominal.dL_da() * (-a) - commutator(nominal.L(a), nominal.N());
    EXPECT_NEAR(res(0, 0), 0.0, 1e-15);
    EXPECT_NEAR(res(0, 1), 2.0 * a, 1e-15);
    EXPECT_NEAR(res(1, 0), 0.0, 1e-15);
    EXPECT_NEAR(res(1, 1), 0.0, 1e-15);

    const LaxPair symmetric{LaxPair::Variant::symmetric};
    const Mat res2 = symmetric.dL_da() * (-a) - commutator(symmetric.L(a), symmetric.N());
    EXPECT_NEAR(res2(0, 1), -2.0 * a, 1e-15);
    EXPECT_NEAR(res2.frobenius(), 2.0 * a, 1e-15);
}

TEST(Lax, TraceAndSpectrum) {
    const LaxPair nominal{LaxPair::Variant::nominal};
    EXPECT_DOUBLE_EQ(nominal.trace(0.3), -1.0);
    EXPECT_DOUBLE_EQ(nominal.trace(5.0), -1.0);
    const auto [l1, l2] = nominal.eigenvalues(1.0);
    EXPECT_DOUBLE_EQ(l1, -1.5);
    EXPECT_DOUBLE_EQ(l2, 0.5);
    const auto traj = integrate_gradient(1.0, 3.0, 1e-2, FlowMethod::exact);
    EXPECT_LT(lax_residual(nominal, traj).trace_drift, 1e-14);

    const LaxPair symmetric{LaxPair::Variant::symmetric};
    EXPECT_DOUBLE_EQ(symmetric.trace(0.3), 1.0);
}

TEST(Integrability, HamiltonianFlowIsCompletelyIntegrable) {
    const auto beta = cone_element("so2", 1.0);
    const auto [traj, drift] = hamiltonian_flow(beta, EtaConvention::grad_phi(), 5.0, 1e-3);
    const auto samples = flow_samples(traj);
    ASSERT_EQ(samples.state_labels.size(), 2u);
    const auto report = integrability_report(
        samples, {{"H", [](const std::vector<double>& s) { return -s[0] * s[1]; }}});
    EXPECT_EQ(report.n_dof, 1);
    ASSERT_EQ(report.integrals.size(), 1u);
    EXPECT_TRUE(report.integrals[0].conserved);
    EXPECT_TRUE(report.integrals[0].independent);
    EXPECT_TRUE(report.independence_ok);
    EXPECT_EQ(report.verdict, "completely integrable");
}

TEST(Integrability, NonConservedCandidateIsRejected) {
    const auto traj = integrate_gradient(1.0, 2.0, 1e-3, FlowMethod::exact);
    const auto report = integrability_report(
        flow_samples(traj), {{"a", [](const std::vector<double>& s) { return s[0]; }},
                             {"const", [](const std::vector<double>&) { return 7.0; }}});
    EXPECT_FALSE(report.integrals[0].conserved);  // a itself decays
    EXPECT_TRUE(report.integrals[1].conserved);   // a constant is conserved...
    EXPECT_FALSE(report.integrals[1].independent);  // ...but not independent
    EXPECT_NE(report.verdict, "completely integrable");
}
