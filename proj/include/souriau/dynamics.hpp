#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "souriau/matrix.hpp"
#include "souriau/thermo.hpp"

namespace souriau {

/// Samples of the scalar flow a(t) (the reduced form of beta-dot = -beta).
struct Trajectory {
    std::vector<double> times;
    std::vector<double> a_values;
    std::string method;  // "exact" or "rk4"
    std::string algebra = "so2";

    Mat beta_at(size_t i) const { return cone_generator(algebra) * a_values[i]; }
};

enum class FlowMethod { exact, rk4 };

/// beta-dot = -beta.
inline Mat gradient_field(const ConeElement& beta) {
    if (!(beta.a > 0)) throw std::domain_error("gradient_field: a must be positive");
    return -beta.matrix;
}

/// Consistency of the field against -a^2 * dPhi/da by central differences,
/// returned as a relative residual.
inline double gradient_field_consistency(const ConeElement& beta) {
    const double a = beta.a;
    const double h = 1e-6 * a;
    // dPhi/d(beta) reduces along the ray to (dPhi/da) * generator scaled by a^2.
    const double dphi = (std::log(2.0 * (a + h)) - std::log(2.0 * (a - h))) / (2.0 * h);
    const double predicted = -a * a * dphi;  // should equal -a
    return std::abs(predicted - (-a)) / a;
}

inline Trajectory integrate_gradient(double a0, double t_end, double dt, FlowMethod method,
                                     const std::string& algebra = "so2") {
    if (!(a0 > 0)) throw std::domain_error("integrate_gradient: a0 must be positive");
    if (!(t_end >= 0)) throw std::domain_error("integrate_gradient: t_end must be >= 0");
    if (t_end > 0 && !(dt > 0 && dt <= t_end))
        throw std::domain_error("integrate_gradient: need 0 < dt <= t_end");

    Trajectory traj;
    traj.method = method == FlowMethod::exact ? "exact" : "rk4";
    traj.algebra = algebra;
    const int steps = t_end > 0 ? static_cast<int>(std::llround(t_end / dt)) : 0;
    traj.times.reserve(steps + 1);
    traj.a_values.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.a_values.push_back(a0);
    double a = a0;
    for (int k = 1; k <= steps; ++k) {
        const double t = k * dt;
        if (method == FlowMethod::exact) {
            a = a0 * std::exp(-t);
        } else {
            // RK4 on a-dot = -a
            const double k1 = -a;
            const double k2 = -(a + 0.5 * dt * k1);
            const double k3 = -(a + 0.5 * dt * k2);
            const double k4 = -(a + dt * k3);
            a += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        traj.times.push_back(t);
        traj.a_values.push_back(a);
    }
    return traj;
}

struct HamiltonianState {
    Mat P;
    Mat Q;
    double H;  // -<P,Q>_{1/2} at construction
};

inline HamiltonianState make_hamiltonian_state(const Mat& p, const Mat& q) {
    return {p, q, -pairing(p, q, PairingConvention::half())};
}

struct HamiltonianTrajectory {
    std::vector<double> times;
    std::vector<HamiltonianState> states;
};

/// Matrix Hamiltonian system P-dot = -P, Q-dot = Q with P(0) = beta,
/// Q(0) = eta = beta/a^2. Returns the trajectory and the
/// drift max_t |H(t) - H(0)|.
inline std::pair<HamiltonianTrajectory, double> hamiltonian_flow(const ConeElement& beta0,
                                                                 const EtaConvention& conv,
                                                                 double t_end, double dt) {
    if (conv.mode != EtaMode::grad_phi)
        throw std::domain_error("hamiltonian_flow: requires the grad_phi eta convention");
    if (!(t_end >= 0) || (t_end > 0 && !(dt > 0 && dt <= t_end)))
        throw std::domain_error("hamiltonian_flow: bad time parameters");

    HamiltonianTrajectory traj;
    Mat p = beta0.matrix;
    Mat q = eta_matrix(beta0, conv);
    traj.times.push_back(0.0);
    traj.states.push_back(make_hamiltonian_state(p, q));
    const double h0 = traj.states.front().H;
    double drift = 0;
    const int steps = t_end > 0 ? static_cast<int>(std::llround(t_end / dt)) : 0;
    auto rk4_step = [dt](Mat& y, double sign) {
        const Mat k1 = y * sign;
        const Mat k2 = (y + k1 * (0.5 * dt)) * sign;
        const Mat k3 = (y + k2 * (0.5 * dt)) * sign;
        const Mat k4 = (y + k3 * dt) * sign;
        y = y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
    };
    for (int k = 1; k <= steps; ++k) {
        rk4_step(p, -1.0);
        rk4_step(q, +1.0);
        traj.times.push_back(k * dt);
        traj.states.push_back(make_hamiltonian_state(p, q));
        drift = std::max(drift, std::abs(traj.states.back().H - h0));
    }
    return {std::move(traj), drift};
}

/// Lax operators for the gradient flow. Two variants of L are in circulation;
/// both are kept so their diagnostics can be compared.
struct LaxPair {
    enum class Variant { nominal, symmetric };
    Variant variant = Variant::nominal;

    Mat L(double a) const {
        if (variant == Variant::nominal) return Mat{{-0.5, -a}, {a, -0.5}};
        return Mat{{0.5, a}, {a, 0.5}};
    }
    Mat N() const { return Mat{{0, 0}, {0, 1}}; }
    Mat dL_da() const {
        if (variant == Variant::nominal) return Mat{{0, -1}, {1, 0}};
        return Mat{{0, 1}, {1, 0}};
    }
    std::pair<double, double> eigenvalues(double a) const {
        if (variant == Variant::nominal) return {-0.5 - a, -0.5 + a};
        return {0.5 - a, 0.5 + a};
    }
    double trace(double a) const { return L(a).trace(); }
    static double k_of_a(double a) { return a; }
    static constexpr double c = 1.0;
};

struct LaxDiagnostics {
    double residual_max;    // max_t ||L-dot - [L,N]||_F along the trajectory
    double spectrum_drift;  // max_t max_i |lambda_i(t) - lambda_i(0)|
    double trace_drift;     // max_t |tr L(t) - tr L(0)|
};

/// Measures the Lax equation along a gradient-flow trajectory. L-dot is exact
/// ((dL/da) a-dot, L linear in a). Nothing is asserted about residual_max
/// here; callers report it and the regression suite locks the oracle value.
inline LaxDiagnostics lax_residual(const LaxPair& pair, const Trajectory& traj) {
    if (traj.times.empty()) throw std::domain_error("lax_residual: empty trajectory");
    LaxDiagnostics d{0, 0, 0};
    const auto [l10, l20] = pair.eigenvalues(traj.a_values.front());
    const double tr0 = pair.trace(traj.a_values.front());
    for (size_t i = 0; i < traj.times.size(); ++i) {
        const double a = traj.a_values[i];
        const Mat ldot = pair.dL_da() * (-a);  // a-dot = -a
        const Mat res = ldot - commutator(pair.L(a), pair.N());
        d.residual_max = std::max(d.residual_max, res.frobenius());
        const auto [l1, l2] = pair.eigenvalues(a);
        d.spectrum_drift =
            std::max({d.spectrum_drift, std::abs(l1 - l10), std::abs(l2 - l20)});
        d.trace_drift = std::max(d.trace_drift, std::abs(pair.trace(a) - tr0));
    }
    return d;
}

struct IntegralDiagnostic {
    std::string label;
    std::vector<double> values;
    double variation;  // peak-to-peak
    bool conserved;
    bool independent;  // gradient non-vanishing along the trajectory
};

struct IntegrabilityReport {
    int n_dof;
    std::vector<IntegralDiagnostic> integrals;
    std::vector<std::vector<double>> involution_residuals;
    bool independence_ok;
    std::string verdict;
};

/// Generic flow samples: one state vector per time. Integrals are functions
/// of the state, so a conserved quantity can still carry a nonzero gradient.
struct FlowSamples {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<std::string> state_labels;
};

inline FlowSamples flow_samples(const Trajectory& traj) {
    FlowSamples s;
    s.times = traj.times;
    s.state_labels = {"a"};
    for (double a : traj.a_values) s.states.push_back({a});
    return s;
}

/// Reduced (p, q) coordinates of the matrix flow: P = p u, Q = q u.
inline FlowSamples flow_samples(const HamiltonianTrajectory& traj) {
    FlowSamples s;
    s.times = traj.times;
    s.state_labels = {"p", "q"};
    for (const auto& st : traj.states) s.states.push_back({st.P(1, 0), st.Q(1, 0)});
    return s;
}

using StateIntegral = std::function<double(const std::vector<double>&)>;

/// Evaluates candidate first integrals along a trajectory. A candidate is
/// conserved if its peak-to-peak variation is < 1e-9 (1 + |mean|), and
/// independent if its finite-difference state gradient stays above 1e-8
/// somewhere along the trajectory. For these one-degree-of-freedom
/// systems one conserved independent integral gives the "completely
/// integrable" verdict. Involution residuals come from the KKS bracket on
/// so(2)*, which vanishes identically (abelian), so they are all zero.
inline IntegrabilityReport integrability_report(
    const FlowSamples& samples,
    const std::vector<std::pair<std::string, StateIntegral>>& integrals) {
    if (samples.times.empty())
        throw std::domain_error("integrability_report: empty trajectory");
    IntegrabilityReport rep;
    rep.n_dof = 1;
    for (const auto& [label, f] : integrals) {
        IntegralDiagnostic diag;
        diag.label = label;
        double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0;
        for (const auto& st : samples.states) {
            const double v = f(st);
            diag.values.push_back(v);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
        const double mean = sum / diag.values.size();
        diag.variation = hi - lo;
        diag.conserved = diag.variation < 1e-9 * (1.0 + std::abs(mean));
        diag.independent = false;
        for (const auto& st : samples.states) {
            double grad_norm = 0;
            for (size_t c = 0; c < st.size(); ++c) {
                const double h = 1e-6 * std::max(std::abs(st[c]), 1e-6);
                auto plus = st, minus = st;
                plus[c] += h;
                minus[c] -= h;
                const double g = (f(plus) - f(minus)) / (2.0 * h);
                grad_norm += g * g;
            }
            if (std::sqrt(grad_norm) > 1e-8) {
                diag.independent = true;
                break;
            }
        }
        rep.integrals.push_back(std::move(diag));
    }
    const size_t n = rep.integrals.size();
    rep.involution_residuals.assign(n, std::vector<double>(n, 0.0));
    int usable = 0;
    for (const auto& d : rep.integrals)
        if (d.conserved && d.independent) ++usable;
    rep.independence_ok = usable >= rep.n_dof;
    rep.verdict = rep.independence_ok ? "completely integrable" : "not established";
    return rep;
}

inline IntegrabilityReport integrability_report(
    const Trajectory& traj,
    const std::vector<std::pair<std::string, StateIntegral>>& integrals) {
    return integrability_report(flow_samples(traj), integrals);
}

}  // namespace souriau
