#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "souriau/algebra.hpp"
#include "souriau/matrix.hpp"
#include "souriau/quadrature.hpp"

namespace souriau {

/// Canonical cone generator: u for so(2), the Z3 pattern for so(3).
inline Mat cone_generator(const std::string& algebra) {
    if (algebra == "so2" || algebra == "sl2") return bases::u2();
    if (algebra == "so3") return bases::Z3();
    throw std::domain_error("cone_generator: unknown algebra '" + algebra + "'");
}

/// beta = a * generator, a > 0. The geometric temperature.
struct ConeElement {
    double a;
    Mat matrix;
    std::string algebra;
};

inline ConeElement cone_element(const std::string& algebra, double a) {
    if (!(a > 0)) throw std::domain_error("cone_element: a must be positive");
    return {a, cone_generator(algebra) * a, algebra};
}

/// xi = x * generator, x > 0. Point of the dual cone (identified with the cone).
struct DualElement {
    double x;
    Mat matrix;
};

inline DualElement dual_element(const std::string& algebra, double x) {
    if (!(x > 0)) throw std::domain_error("dual_element: x must be positive");
    return {x, cone_generator(algebra) * x};
}

/// How the geometric heat eta is produced from beta. grad_phi is the
/// gradient formula eta = beta / <beta,beta>; the +-beta alternates exist
/// because the published metric tables need them.
enum class EtaMode { grad_phi, minus_beta, plus_beta };

struct EtaConvention {
    EtaMode mode;
    std::string label;

    static EtaConvention grad_phi() { return {EtaMode::grad_phi, "eta=beta/a^2"}; }
    static EtaConvention minus_beta() { return {EtaMode::minus_beta, "eta=-beta"}; }
    static EtaConvention plus_beta() { return {EtaMode::plus_beta, "eta=+beta"}; }
};

/// eta as a function of an arbitrary cone matrix (used for equivariance
/// sweeps, where the argument is Ad_g beta).
inline Mat eta_of(const Mat& beta_matrix, EtaMode mode) {
    switch (mode) {
        case EtaMode::minus_beta: return -beta_matrix;
        case EtaMode::plus_beta: return beta_matrix;
        case EtaMode::grad_phi: {
            const double bb = pairing(beta_matrix, beta_matrix, PairingConvention::half());
            if (!(bb > 0)) throw std::domain_error("eta_of: zero beta");
            return beta_matrix * (1.0 / bb);
        }
    }
    throw std::domain_error("eta_of: bad mode");
}

inline Mat eta_matrix(const ConeElement& beta, const EtaConvention& conv) {
    return eta_of(beta.matrix, conv.mode);
}

struct ThermoPotentials {
    double chi;
    double phi;
    double psi;
    Mat eta;
    EtaConvention convention;
    double legendre_residual;  // psi + phi - <beta, eta>_{1/2}
};

enum class ChiMethod { closed_form, quadrature };

/// Koszul characteristic chi(beta) = integral of e^{-2ax} over (0, inf) = 1/(2a).
inline double koszul_chi(const ConeElement& beta, ChiMethod method) {
    if (!(beta.a > 0)) throw std::domain_error("koszul_chi: a must be positive");
    if (method == ChiMethod::closed_form) return 1.0 / (2.0 * beta.a);
    const double a = beta.a;
    return integrate_decaying([a](double x) { return std::exp(-2.0 * a * x); }, 2.0 * a);
}

inline ThermoPotentials potentials(const ConeElement& beta, const EtaConvention& conv) {
    if (!(beta.a > 0)) throw std::domain_error("potentials: a must be positive");
    ThermoPotentials p{};
    p.chi = 1.0 / (2.0 * beta.a);
    p.phi = std::log(2.0 * beta.a);
    p.psi = 1.0 - std::log(2.0 * beta.a);
    p.eta = eta_matrix(beta, conv);
    p.convention = conv;
    p.legendre_residual =
        p.psi + p.phi - pairing(beta.matrix, p.eta, PairingConvention::half());
    return p;
}

/// Normalized distinguished density p(beta, xi) = 2a e^{-2ax}. The pairing
/// identification <beta,xi> = 2ax is fixed for both groups.
inline double density_eval(const ConeElement& beta, const DualElement& xi) {
    if (!(beta.a > 0) || !(xi.x > 0)) throw std::domain_error("density_eval: domain");
    return 2.0 * beta.a * std::exp(-2.0 * beta.a * xi.x);
}

struct DensityMoments {
    double mean_x;
    double var_x;
    // Which eta convention (if any) identifies mean_x * generator with eta.
    std::string mean_identification;
};

inline DensityMoments density_moments(const ConeElement& beta) {
    if (!(beta.a > 0)) throw std::domain_error("density_moments: a must be positive");
    const double a = beta.a;
    auto dens = [a](double x) { return 2.0 * a * std::exp(-2.0 * a * x); };
    const double mean = integrate_decaying([&](double x) { return x * dens(x); }, 2.0 * a);
    const double second =
        integrate_decaying([&](double x) { return x * x * dens(x); }, 2.0 * a);
    DensityMoments m{mean, second - mean * mean, ""};
    const Mat mean_matrix = cone_generator(beta.algebra) * mean;
    const char* names[] = {"grad_phi", "minus_beta", "plus_beta"};
    const EtaMode modes[] = {EtaMode::grad_phi, EtaMode::minus_beta, EtaMode::plus_beta};
    m.mean_identification = "none";
    for (int i = 0; i < 3; ++i) {
        if ((mean_matrix - eta_of(beta.matrix, modes[i])).max_abs() < 1e-8) {
            m.mean_identification = names[i];
            break;
        }
    }
    return m;
}

enum class FisherMethod { closed_form, finite_difference, statistical };

/// Scalar Fisher information I(a) = -Phi''(a) = 1/a^2.
inline double scalar_fisher(const ConeElement& beta, FisherMethod method) {
    if (!(beta.a > 0)) throw std::domain_error("scalar_fisher: a must be positive");
    const double a = beta.a;
    switch (method) {
        case FisherMethod::closed_form:
            return 1.0 / (a * a);
        case FisherMethod::finite_difference: {
            const double h = 1e-4 * a;
            auto phi = [](double t) { return std::log(2.0 * t); };
            return -(phi(a + h) - 2.0 * phi(a) + phi(a - h)) / (h * h);
        }
        case FisherMethod::statistical: {
            // E[(d_a log p)^2] with log p = log(2a) - 2ax.
            auto integrand = [a](double x) {
                const double score = 1.0 / a - 2.0 * x;
                return score * score * 2.0 * a * std::exp(-2.0 * a * x);
            };
            return integrate_decaying(integrand, 2.0 * a);
        }
    }
    throw std::domain_error("scalar_fisher: bad method");
}

/// Antisymmetrized 2-cocycle built from a 1-cocycle and a pairing convention:
/// value(B_p,B_q) = 1/2 (<Theta(B_p),B_q> - <Theta(B_q),B_p>) on the algebra
/// basis, extended bilinearly. The extension matters: Theta = -(.)^{-1} is not
/// linear, so evaluating the raw formula off the basis would not be bilinear
/// (and hence not a 2-cocycle).
struct TwoCocycle {
    AlgebraCocycle base;
    PairingConvention convention;
};

namespace detail {

// {u, e1, e2} resp. {Z1, Z2, Z3}: orthonormal under s = 1/2, so coordinates
// are plain half-trace projections.
inline const std::vector<Mat>& cocycle_basis(int dim) {
    static const std::vector<Mat> b2 = {bases::u2(), bases::e1(), bases::e2()};
    static const std::vector<Mat> b3 = {bases::Z1(), bases::Z2(), bases::Z3()};
    if (dim == 2) return b2;
    if (dim == 3) return b3;
    throw std::domain_error("two_cocycle_eval: dim must be 2 or 3");
}

}  // namespace detail

inline double two_cocycle_eval(const TwoCocycle& tc, const Mat& x, const Mat& y) {
    if (x.dim() != y.dim()) throw std::domain_error("two_cocycle_eval: dimension mismatch");
    const auto& basis = detail::cocycle_basis(x.dim());
    const int n = static_cast<int>(basis.size());
    double value = 0;
    for (int p = 0; p < n; ++p) {
        const double xp = 0.5 * (basis[p].transpose() * x).trace();
        if (xp == 0.0) continue;
        const Mat tp = apply_cocycle(tc.base, basis[p]);
        for (int q = 0; q < n; ++q) {
            const double yq = 0.5 * (basis[q].transpose() * y).trace();
            if (yq == 0.0) continue;
            const double c =
                0.5 * (pairing(tp, basis[q], tc.convention) -
                       pairing(apply_cocycle(tc.base, basis[q]), basis[p], tc.convention));
            value += xp * yq * c;
        }
    }
    return value;
}

/// max over samples of || eta(Ad_g beta) - Ad*_g eta(beta) ||, i.e. the norm
/// of the group 1-cocycle theta(g). Zero means equivariance.
inline double group_cocycle_residual(const ConeElement& beta, const EtaConvention& conv,
                                     const std::vector<GroupElement>& samples) {
    const Mat eta0 = eta_matrix(beta, conv);
    double worst = 0;
    for (const GroupElement& g : samples) {
        const Mat lhs = eta_of(adjoint_group(g, beta.matrix), conv.mode);
        const Mat rhs = coadjoint_group(g, eta0);
        worst = std::max(worst, (lhs - rhs).max_abs());
    }
    return worst;
}

}  // namespace souriau
