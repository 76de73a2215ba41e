#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace souriau {

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1].
inline constexpr double kGK15Nodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};

inline constexpr double kGK15Weights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};

inline constexpr double kG7Weights[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870};

struct GKResult {
    double value;
    double error;
};

inline GKResult gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double kronrod = 0, gauss = 0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(c + h * kGK15Nodes[i]);
        kronrod += kGK15Weights[i] * fx;
        if (i % 2 == 1) gauss += kG7Weights[i / 2] * fx;
    }
    kronrod *= h;
    gauss *= h;
    return {kronrod, std::abs(kronrod - gauss)};
}

inline double adaptive(const std::function<double(double)>& f, double lo, double hi,
                       double tol, int depth) {
    const GKResult r = gk15(f, lo, hi);
    if (r.error <= tol || depth >= 40) return r.value;
    const double mid = 0.5 * (lo + hi);
    return adaptive(f, lo, mid, 0.5 * tol, depth + 1) +
           adaptive(f, mid, hi, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod on [lo, hi], absolute tolerance `tol`.
inline double integrate(const std::function<double(double)>& f, double lo, double hi,
                        double tol = 1e-10) {
    if (!(hi > lo)) throw std::domain_error("integrate: empty interval");
    return detail::adaptive(f, lo, hi, tol, 0);
}

/// Integral over (0, inf) of an integrand dominated by e^{-rate * x}: the
/// interval is truncated where the exponential tail drops below 1e-16.
inline double integrate_decaying(const std::function<double(double)>& f, double rate,
                                 double tol = 1e-10) {
    if (!(rate > 0)) throw std::domain_error("integrate_decaying: rate must be positive");
    // e^{-rate x} < 1e-16  at  x = 16 ln(10)/rate; pad for polynomial factors.
    const double x_max = (16.0 * std::numbers::ln10 + 24.0) / rate;
    return integrate(f, 0.0, x_max, tol);
}

}  // namespace souriau
