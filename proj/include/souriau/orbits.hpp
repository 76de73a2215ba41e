#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "souriau/algebra.hpp"
#include "souriau/matrix.hpp"
#include "souriau/thermo.hpp"

namespace souriau {

/// Ad*-orbit of a seed xi under sampled group elements.
struct OrbitSample {
    Mat seed;
    std::string group;
    std::vector<Mat> points;
    double max_spread = 0;
};

/// Conjugates xi by n sampled group elements. For "SO2"/"SO3" the sweep is
/// exp(t * generator) at uniform t; for "O3" it is the J-sweep {I, J}.
inline OrbitSample orbit_sample(const Mat& xi, const std::string& group, int n) {
    if (n < 1) throw std::domain_error("orbit_sample: n must be >= 1");
    std::vector<GroupElement> elements;
    if (group == "SO2") {
        if (xi.dim() != 2) throw std::domain_error("orbit_sample: dimension mismatch");
        elements = group_sweep(bases::u2(), "SO2", n);
    } else if (group == "SO3") {
        if (xi.dim() != 3) throw std::domain_error("orbit_sample: dimension mismatch");
        elements = group_sweep(bases::Z3(), "SO3", n);
    } else if (group == "O3") {
        if (xi.dim() != 3) throw std::domain_error("orbit_sample: dimension mismatch");
        elements = {make_group_element(Mat::identity(3), "O3"),
                    make_group_element(bases::J3(), "O3")};
    } else {
        throw std::domain_error("orbit_sample: unknown group '" + group + "'");
    }
    OrbitSample orbit{xi, group, {}, 0.0};
    for (const GroupElement& g : elements) orbit.points.push_back(coadjoint_group(g, xi));
    for (size_t i = 0; i < orbit.points.size(); ++i)
        for (size_t j = i + 1; j < orbit.points.size(); ++j)
            orbit.max_spread =
                std::max(orbit.max_spread, (orbit.points[i] - orbit.points[j]).max_abs());
    return orbit;
}

/// Whether xi lies on the leaf ray {x * generator : x > 0}, and the ray
/// coordinate. The boundary x = 0 is excluded.
inline std::pair<bool, double> leaf_membership(const Mat& xi, const std::string& group) {
    const std::string algebra = group == "SO2" ? "so2" : "so3";
    const Mat gen = cone_generator(algebra);
    if (xi.dim() != gen.dim()) throw std::domain_error("leaf_membership: dimension mismatch");
    const double x = pairing(gen, xi, PairingConvention::half());
    if (!(x > 0)) return {false, x};
    const bool on_ray = (xi - gen * x).max_abs() <= 1e-12 * (1.0 + xi.max_abs());
    return {on_ray, on_ray ? x : 0.0};
}

/// KKS symplectic form at F: sigma(K_X F, K_Y F) = <F, [X, Y]>.
inline double kks_form(const Mat& f, const Mat& x, const Mat& y,
                       const PairingConvention& conv) {
    return pairing(f, commutator(x, y), conv);
}

/// Scalar field on the dual, with an optional analytic gradient (linear
/// functionals <., A> have gradient A).
struct ScalarField {
    std::function<double(const Mat&)> f;
    std::optional<Mat> gradient;
};

inline ScalarField linear_functional(const Mat& a, const PairingConvention& conv) {
    return {[a, conv](const Mat& xi) { return pairing(xi, a, conv); }, a};
}

/// Evaluator for the KKS Poisson bracket {F,G}(X) = <X, [dF, dG]> and, when a
/// 2-cocycle is attached, the affine bracket with the extra cocycle term.
struct PoissonEvaluator {
    LieAlgebraSpec algebra;
    PairingConvention convention;
    std::optional<TwoCocycle> cocycle;
};

namespace detail {

inline Mat field_gradient(const PoissonEvaluator& ev, const ScalarField& field,
                          const Mat& point) {
    if (field.gradient) return *field.gradient;
    // Central differences in basis coordinates; dF(delta) = <grad, delta>
    // under the evaluator's pairing, solved against the Gram matrix.
    const int n = ev.algebra.dim_algebra();
    const double step = 1e-5;
    std::vector<double> df(n);
    for (int i = 0; i < n; ++i) {
        const Mat plus = point + ev.algebra.basis[i] * step;
        const Mat minus = point - ev.algebra.basis[i] * step;
        df[i] = (field.f(plus) - field.f(minus)) / (2.0 * step);
        if (!std::isfinite(df[i]))
            throw std::runtime_error("poisson_bracket: gradient evaluation failed");
    }
    std::vector<std::vector<double>> gram(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram[i][j] = pairing(ev.algebra.basis[i], ev.algebra.basis[j], ev.convention);
    const auto coeffs = solve_dense(gram, df);
    Mat grad(ev.algebra.dim_matrix);
    for (int i = 0; i < n; ++i) grad = grad + ev.algebra.basis[i] * coeffs[i];
    return grad;
}

}  // namespace detail

inline double poisson_bracket(const PoissonEvaluator& ev, const ScalarField& f,
                              const ScalarField& g, const Mat& point) {
    const Mat df = detail::field_gradient(ev, f, point);
    const Mat dg = detail::field_gradient(ev, g, point);
    double value = pairing(point, commutator(df, dg), ev.convention);
    if (ev.cocycle) value += two_cocycle_eval(*ev.cocycle, df, dg);
    return value;
}

}  // namespace souriau
