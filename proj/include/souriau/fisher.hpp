#pragma once

#include <boost/rational.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "souriau/algebra.hpp"
#include "souriau/matrix.hpp"
#include "souriau/thermo.hpp"

namespace souriau {

using Rat = boost::rational<long long>;

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

struct MetricConvention {
    PairingConvention pairing;
    EtaConvention eta;

    std::string label() const { return pairing.label + ", " + eta.label; }
};

inline std::vector<MetricConvention> all_metric_conventions() {
    std::vector<MetricConvention> out;
    for (const auto& p : {PairingConvention::half(), PairingConvention::one()})
        for (const auto& e :
             {EtaConvention::grad_phi(), EtaConvention::minus_beta(), EtaConvention::plus_beta()})
            out.push_back({p, e});
    return out;
}

namespace detail {

template <class T>
bool is_zero_matrix(const Matrix<T>& m) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!(m(i, j) == T(0))) return false;
    return true;
}

template <class T>
Matrix<T> apply_cocycle_T(AlgebraCocycle::Kind kind, const Matrix<T>& j, const Matrix<T>& x) {
    if (kind == AlgebraCocycle::Kind::neg_inverse) return -inverse2or3(x);
    return j * x * j.transpose();
}

// {u, e1, e2} resp. {Z1, Z2, Z3}: orthonormal under s = 1/2.
template <class T>
std::vector<Matrix<T>> cocycle_basis_T(int dim) {
    const T z(0), p(1), m(-1);
    if (dim == 2)
        return {Matrix<T>{{z, m}, {p, z}}, Matrix<T>{{z, p}, {p, z}}, Matrix<T>{{p, z}, {z, m}}};
    if (dim == 3)
        return {Matrix<T>{{z, z, z}, {z, z, m}, {z, p, z}},
                Matrix<T>{{z, z, p}, {z, z, z}, {m, z, z}},
                Matrix<T>{{z, m, z}, {p, z, z}, {z, z, z}}};
    throw std::domain_error("cocycle_basis_T: dim must be 2 or 3");
}

// Antisymmetrized values on the basis, extended bilinearly; the raw 1-cocycle
// is not linear, so the extension is part of the definition.
template <class T>
T two_cocycle_T(AlgebraCocycle::Kind kind, const Matrix<T>& j, PairingScale s,
                const Matrix<T>& x, const Matrix<T>& y) {
    if (x == y || is_zero_matrix(x) || is_zero_matrix(y)) return T(0);
    const auto basis = cocycle_basis_T<T>(x.dim());
    const int n = static_cast<int>(basis.size());
    const T sv = scale_value<T>(s);
    T value(0);
    for (int p = 0; p < n; ++p) {
        const T xp = (basis[p].transpose() * x).trace() / T(2);
        if (xp == T(0)) continue;
        const Matrix<T> tp = apply_cocycle_T(kind, j, basis[p]);
        for (int q = 0; q < n; ++q) {
            const T yq = (basis[q].transpose() * y).trace() / T(2);
            if (yq == T(0)) continue;
            const T fwd = sv * (tp.transpose() * basis[q]).trace();
            const T bwd = sv * (apply_cocycle_T(kind, j, basis[q]).transpose() * basis[p]).trace();
            value += xp * yq * (fwd - bwd) / T(2);
        }
    }
    return value;
}

template <class T>
Matrix<T> eta_from_beta(const Matrix<T>& beta, const T& a, EtaMode mode) {
    switch (mode) {
        case EtaMode::minus_beta: return -beta;
        case EtaMode::plus_beta: return beta;
        case EtaMode::grad_phi: return beta * (T(1) / (a * a));
    }
    throw std::domain_error("eta_from_beta: bad mode");
}

/// g_beta([beta,Zi],[beta,Zj]) = ThetaTilde(Zi,[beta,Zj]) + <eta,[Zi,[beta,Zj]]>.
template <class T>
T metric_entry_T(const Matrix<T>& beta, const T& a, const Matrix<T>& zi, const Matrix<T>& zj,
                 AlgebraCocycle::Kind kind, const Matrix<T>& j, PairingScale s, EtaMode mode) {
    const Matrix<T> bzj = commutator(beta, zj);
    const Matrix<T> eta = eta_from_beta(beta, a, mode);
    const T first = two_cocycle_T(kind, j, s, zi, bzj);
    const T second = scale_value<T>(s) * (eta.transpose() * commutator(zi, bzj)).trace();
    return first + second;
}

inline AlgebraCocycle::Kind cocycle_kind_for(const std::string& algebra) {
    return algebra == "so3" ? AlgebraCocycle::Kind::ad_J : AlgebraCocycle::Kind::neg_inverse;
}

inline Mat cocycle_J_for(const std::string& algebra) {
    return algebra == "so3" ? bases::J3() : Mat::identity(2);
}

}  // namespace detail

inline double metric_entry(const ConeElement& beta, const Mat& zi, const Mat& zj,
                           const MetricConvention& conv) {
    if (zi.dim() != beta.matrix.dim() || zj.dim() != beta.matrix.dim())
        throw std::domain_error("metric_entry: dimension mismatch");
    return detail::metric_entry_T<double>(beta.matrix, beta.a, zi, zj,
                                          detail::cocycle_kind_for(beta.algebra),
                                          detail::cocycle_J_for(beta.algebra),
                                          conv.pairing.scale, conv.eta.mode);
}

struct MonomialFit {
    double coefficient = 0;
    int exponent = 0;
    double residual = 0;
    bool is_monomial = true;
};

struct MetricDiscrepancy {
    int i, j;
    double expected;
    double computed;
    bool sign_only;  // |expected| == |computed| but signs differ
};

struct MetricReport {
    std::vector<std::string> basis_labels;
    MetricConvention convention;
    std::vector<double> a_samples;
    std::vector<Mat> matrices;  // one per a sample
    Mat matrix;                 // at the first a sample
    std::vector<std::vector<MonomialFit>> fit;
    std::vector<MetricDiscrepancy> discrepancies;  // vs. target, when one is given
    double symmetric_defect = 0;
    double max_deviation = 0;  // vs. target, when one is given
};

using BasisAt = std::function<std::vector<Mat>(double a)>;

namespace detail {

inline MonomialFit fit_monomial(const std::vector<double>& a_samples,
                                const std::vector<double>& values) {
    MonomialFit best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int k = -2; k <= 2; ++k) {
        double num = 0, den = 0;
        for (size_t s = 0; s < a_samples.size(); ++s) {
            const double ak = std::pow(a_samples[s], k);
            num += values[s] * ak;
            den += ak * ak;
        }
        const double c = den > 0 ? num / den : 0.0;
        double res = 0;
        for (size_t s = 0; s < a_samples.size(); ++s)
            res = std::max(res, std::abs(values[s] - c * std::pow(a_samples[s], k)));
        if (res < best.residual) best = {c, k, res, true};
    }
    if (best.residual >= 1e-9) best.is_monomial = false;
    // Report all-zero entries as c = 0, k = 0.
    if (std::abs(best.coefficient) < 1e-15) best = {0.0, 0, best.residual, best.is_monomial};
    return best;
}

}  // namespace detail

/// Full metric matrix over the (possibly a-dependent) basis at each a sample,
/// with a per-entry monomial fit c * a^k.
inline MetricReport metric_matrix(const std::string& algebra, const BasisAt& basis_at,
                                  std::vector<std::string> labels,
                                  const MetricConvention& conv,
                                  const std::vector<double>& a_samples) {
    if (a_samples.size() < 3)
        throw std::domain_error("metric_matrix: need at least 3 a samples");
    for (double a : a_samples)
        if (!(a > 0)) throw std::domain_error("metric_matrix: a samples must be positive");

    MetricReport report;
    report.basis_labels = std::move(labels);
    report.convention = conv;
    report.a_samples = a_samples;

    int n = 0;
    for (double a : a_samples) {
        const auto basis = basis_at(a);
        if (basis.empty()) throw std::domain_error("metric_matrix: empty basis");
        n = static_cast<int>(basis.size());
        const ConeElement beta = cone_element(algebra, a);
        Mat g(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = metric_entry(beta, basis[i], basis[j], conv);
        report.symmetric_defect =
            std::max(report.symmetric_defect, (g - g.transpose()).max_abs());
        report.matrices.push_back(std::move(g));
    }
    report.matrix = report.matrices.front();

    report.fit.assign(n, std::vector<MonomialFit>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<double> vals;
            vals.reserve(a_samples.size());
            for (const Mat& g : report.matrices) vals.push_back(g(i, j));
            report.fit[i][j] = detail::fit_monomial(a_samples, vals);
        }
    return report;
}

inline MetricReport metric_matrix(const ConeElement& beta, const std::vector<Mat>& basis,
                                  const MetricConvention& conv,
                                  const std::vector<double>& a_samples) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < basis.size(); ++i) labels.push_back("B" + std::to_string(i + 1));
    return metric_matrix(
        beta.algebra, [basis](double) { return basis; }, std::move(labels), conv, a_samples);
}

enum class PaperTable { thm41, thm41_normalized, thm62 };

namespace detail {

struct RationalTable {
    std::string algebra;
    std::vector<std::string> labels;
    // basis and target as functions of rational a
    std::function<std::vector<Matrix<Rat>>(const Rat&)> basis_at;
    std::function<Matrix<Rat>(const Rat&)> target_at;
    BasisAt basis_at_double;
    std::function<Mat(double)> target_at_double;
};

inline Matrix<Rat> rat_u2() { return Matrix<Rat>{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}; }
inline Matrix<Rat> rat_e1() { return Matrix<Rat>{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}; }
inline Matrix<Rat> rat_e2() { return Matrix<Rat>{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}; }

inline Matrix<Rat> rat_z(int which) {
    Matrix<Rat> m(3);
    switch (which) {
        case 1: m(1, 2) = Rat(-1); m(2, 1) = Rat(1); break;
        case 2: m(0, 2) = Rat(1); m(2, 0) = Rat(-1); break;
        case 3: m(0, 1) = Rat(-1); m(1, 0) = Rat(1); break;
    }
    return m;
}

inline Matrix<Rat> rat_J3() {
    Matrix<Rat> j = Matrix<Rat>::identity(3);
    j(2, 2) = Rat(-1);
    return j;
}

inline RationalTable table_spec(PaperTable target) {
    RationalTable t;
    auto diag2 = [](const Rat& d) {
        Matrix<Rat> m(2);
        m(0, 0) = d;
        m(1, 1) = d;
        return m;
    };
    switch (target) {
        case PaperTable::thm41:
            t.algebra = "sl2";
            t.labels = {"e1", "e2"};
            t.basis_at = [](const Rat&) {
                return std::vector<Matrix<Rat>>{rat_e1(), rat_e2()};
            };
            t.target_at = [diag2](const Rat& a) { return diag2(Rat(4) * a * a); };
            t.basis_at_double = [](double) {
                return std::vector<Mat>{bases::e1(), bases::e2()};
            };
            t.target_at_double = [](double a) {
                Mat m(2);
                m(0, 0) = m(1, 1) = 4.0 * a * a;
                return m;
            };
            break;
        case PaperTable::thm41_normalized:
            t.algebra = "sl2";
            t.labels = {"Z1=e1/(2a^2)", "Z2=e2/(2a^2)"};
            t.basis_at = [](const Rat& a) {
                const Rat s = Rat(1) / (Rat(2) * a * a);
                return std::vector<Matrix<Rat>>{rat_e1() * s, rat_e2() * s};
            };
            t.target_at = [diag2](const Rat& a) { return diag2(Rat(1) / (a * a)); };
            t.basis_at_double = [](double a) {
                const double s = 1.0 / (2.0 * a * a);
                return std::vector<Mat>{bases::e1() * s, bases::e2() * s};
            };
            t.target_at_double = [](double a) {
                Mat m(2);
                m(0, 0) = m(1, 1) = 1.0 / (a * a);
                return m;
            };
            break;
        case PaperTable::thm62:
            t.algebra = "so3";
            t.labels = {"Z1", "Z2", "Z3"};
            t.basis_at = [](const Rat&) {
                return std::vector<Matrix<Rat>>{rat_z(1), rat_z(2), rat_z(3)};
            };
            t.target_at = [](const Rat& a) {
                Matrix<Rat> m(3);
                m(0, 0) = m(1, 1) = Rat(2) * a * a;
                return m;
            };
            t.basis_at_double = [](double) {
                return std::vector<Mat>{bases::Z1(), bases::Z2(), bases::Z3()};
            };
            t.target_at_double = [](double a) {
                Mat m(3);
                m(0, 0) = m(1, 1) = 2.0 * a * a;
                return m;
            };
            break;
    }
    return t;
}

}  // namespace detail

/// Exhaustive sweep over pairing scale {1/2, 1} x eta mode {grad_phi,
/// minus_beta, plus_beta}, in exact rational arithmetic at a in {1/2, 1, 2}.
/// Returns the convention minimizing the max entrywise deviation from the
/// target table, plus a full discrepancy report (sign-only mismatches
/// included). Nonzero residuals under the best convention are always listed.
inline std::pair<MetricConvention, MetricReport> reproduce_paper_tables(PaperTable target) {
    const detail::RationalTable spec = detail::table_spec(target);
    const std::vector<Rat> rat_samples = {Rat(1, 2), Rat(1), Rat(2)};
    const std::vector<double> dbl_samples = {0.5, 1.0, 2.0};
    const AlgebraCocycle::Kind kind = detail::cocycle_kind_for(spec.algebra);
    const Matrix<Rat> j =
        spec.algebra == "so3" ? detail::rat_J3() : Matrix<Rat>::identity(2);
    const Matrix<Rat> gen = spec.algebra == "so3" ? detail::rat_z(3) : detail::rat_u2();

    const auto conventions = all_metric_conventions();
    MetricConvention best = conventions.front();
    Rat best_dev;
    bool have_best = false;
    for (const MetricConvention& conv : conventions) {
        Rat dev(0);
        for (const Rat& a : rat_samples) {
            const Matrix<Rat> beta = gen * a;
            const auto basis = spec.basis_at(a);
            const Matrix<Rat> tgt = spec.target_at(a);
            const int n = static_cast<int>(basis.size());
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj) {
                    const Rat v = detail::metric_entry_T<Rat>(
                        beta, a, basis[i], basis[jj], kind, j, conv.pairing.scale,
                        conv.eta.mode);
                    dev = std::max(dev, rat_abs(v - tgt(i, jj)));
                }
        }
        if (!have_best || dev < best_dev) {
            best = conv;
            best_dev = dev;
            have_best = true;
        }
    }

    MetricReport report = metric_matrix(spec.algebra, spec.basis_at_double, spec.labels,
                                        best, dbl_samples);
    for (size_t s = 0; s < dbl_samples.size(); ++s) {
        const Mat tgt = spec.target_at_double(dbl_samples[s]);
        const Mat& g = report.matrices[s];
        for (int i = 0; i < g.dim(); ++i)
            for (int jj = 0; jj < g.dim(); ++jj) {
                const double d = std::abs(g(i, jj) - tgt(i, jj));
                report.max_deviation = std::max(report.max_deviation, d);
                if (d > 1e-12) {
                    const bool sign_only =
                        std::abs(std::abs(g(i, jj)) - std::abs(tgt(i, jj))) <= 1e-12;
                    report.discrepancies.push_back({i, jj, tgt(i, jj), g(i, jj), sign_only});
                }
            }
    }
    return {best, report};
}

}  // namespace souriau
