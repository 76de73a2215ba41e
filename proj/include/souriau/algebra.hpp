#pragma once

#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "souriau/matrix.hpp"

namespace souriau {

/// Named Lie algebra with an ordered matrix basis and structure constants
/// [B_i, B_j] = sum_k c[i][j][k] B_k. Immutable after construction.
struct LieAlgebraSpec {
    std::string name;
    int dim_matrix = 0;
    std::vector<Mat> basis;
    std::vector<std::vector<std::vector<double>>> c;

    int dim_algebra() const { return static_cast<int>(basis.size()); }
};

struct GroupElement {
    Mat matrix;
    std::string group;  // "SO2", "SO3", "O3"
};

inline bool is_orthogonal(const Mat& g, double tol = 1e-10) {
    return (g.transpose() * g - Mat::identity(g.dim())).max_abs() <= tol;
}

inline GroupElement make_group_element(const Mat& g, const std::string& group) {
    if (!is_orthogonal(g)) throw std::domain_error("group element is not orthogonal");
    const double det = determinant2or3(g);
    if (group.rfind("SO", 0) == 0 && det < 0)
        throw std::domain_error("SO group element must have det +1");
    return {g, group};
}

/// Ad_g(X) = g X g^{-1}, with g^{-1} = g^T for the orthogonal groups here.
inline Mat adjoint_group(const GroupElement& g, const Mat& x) {
    if (g.matrix.dim() != x.dim()) throw std::domain_error("adjoint_group: dimension mismatch");
    if (!is_orthogonal(g.matrix)) throw std::domain_error("adjoint_group: g not orthogonal");
    return g.matrix * x * g.matrix.transpose();
}

/// Coadjoint action on dual elements represented as matrices via the trace
/// pairing: Ad*_g(xi) = g^{-1} xi g.
inline Mat coadjoint_group(const GroupElement& g, const Mat& xi) {
    if (g.matrix.dim() != xi.dim())
        throw std::domain_error("coadjoint_group: dimension mismatch");
    if (!is_orthogonal(g.matrix)) throw std::domain_error("coadjoint_group: g not orthogonal");
    return g.matrix.transpose() * xi * g.matrix;
}

/// Coordinates of X in the algebra basis, solved against the s=1/2 Gram matrix.
inline std::vector<double> basis_coordinates(const LieAlgebraSpec& alg, const Mat& x) {
    const int n = alg.dim_algebra();
    const auto half = PairingConvention::half();
    std::vector<std::vector<double>> gram(n, std::vector<double>(n));
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) gram[i][j] = pairing(alg.basis[i], alg.basis[j], half);
        rhs[i] = pairing(alg.basis[i], x, half);
    }
    return solve_dense(gram, rhs);
}

inline Mat from_coordinates(const LieAlgebraSpec& alg, const std::vector<double>& c) {
    Mat x(alg.dim_matrix);
    for (size_t i = 0; i < c.size(); ++i) x = x + alg.basis[i] * c[i];
    return x;
}

/// Residual of X against its projection onto the basis span.
inline double span_residual(const LieAlgebraSpec& alg, const Mat& x) {
    return (x - from_coordinates(alg, basis_coordinates(alg, x))).max_abs();
}

namespace bases {

inline Mat u2() { return Mat{{0, -1}, {1, 0}}; }
inline Mat e1() { return Mat{{0, 1}, {1, 0}}; }
inline Mat e2() { return Mat{{1, 0}, {0, -1}}; }
inline Mat Z1() { return Mat{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}; }
inline Mat Z2() { return Mat{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}; }
inline Mat Z3() { return Mat{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}; }
inline Mat J3() { return Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}; }

}  // namespace bases

namespace detail {

inline std::vector<std::vector<std::vector<double>>> structure_constants(
    const std::vector<Mat>& basis, int dim_matrix) {
    LieAlgebraSpec tmp{"", dim_matrix, basis, {}};
    const int n = static_cast<int>(basis.size());
    std::vector<std::vector<std::vector<double>>> c(
        n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Mat br = commutator(basis[i], basis[j]);
            auto coords = basis_coordinates(tmp, br);
            if ((br - from_coordinates(tmp, coords)).max_abs() > 1e-10)
                throw std::domain_error("basis is not closed under bracket");
            c[i][j] = std::move(coords);
        }
    return c;
}

}  // namespace detail

/// The three built-in algebras. so2 = {u}; sl2 = {u, e1, e2} (so(2) adjoined to
/// the complement p); so3 = {Z1, Z2, Z3}.
inline LieAlgebraSpec builtin_algebra(const std::string& name) {
    LieAlgebraSpec alg;
    alg.name = name;
    if (name == "so2") {
        alg.dim_matrix = 2;
        alg.basis = {bases::u2()};
    } else if (name == "sl2") {
        alg.dim_matrix = 2;
        alg.basis = {bases::u2(), bases::e1(), bases::e2()};
    } else if (name == "so3") {
        alg.dim_matrix = 3;
        alg.basis = {bases::Z1(), bases::Z2(), bases::Z3()};
    } else {
        throw std::domain_error("builtin_algebra: unknown algebra '" + name + "'");
    }
    alg.c = detail::structure_constants(alg.basis, alg.dim_matrix);
    return alg;
}

/// Max Frobenius norm of the Jacobi cyclic sum over all basis triples plus
/// `samples` random linear combinations.
inline double jacobi_check(const LieAlgebraSpec& alg, int samples, unsigned seed = 0) {
    if (samples < 1) throw std::domain_error("jacobi_check: samples must be >= 1");
    auto cyc = [](const Mat& x, const Mat& y, const Mat& z) {
        return commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
               commutator(z, commutator(x, y));
    };
    double worst = 0;
    const int n = alg.dim_algebra();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                worst = std::max(worst, cyc(alg.basis[i], alg.basis[j], alg.basis[k]).frobenius());
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto random_element = [&] {
        std::vector<double> c(n);
        for (auto& x : c) x = dist(rng);
        return from_coordinates(alg, c);
    };
    for (int s = 0; s < samples; ++s)
        worst = std::max(worst, cyc(random_element(), random_element(), random_element()).frobenius());
    return worst;
}

/// 1-cocycle on the algebra. neg_inverse is X -> -X^{-1} (so(2)/sl2 case);
/// ad_J is X -> J X J^{-1} (so(3) case, J in O(3)).
struct AlgebraCocycle {
    enum class Kind { neg_inverse, ad_J };
    Kind kind;
    GroupElement J;  // used by ad_J only

    static AlgebraCocycle neg_inverse() {
        return {Kind::neg_inverse, {Mat::identity(2), "SO2"}};
    }
    static AlgebraCocycle ad_J(const GroupElement& j) { return {Kind::ad_J, j}; }
    static AlgebraCocycle identity(int dim) {
        return {Kind::ad_J, {Mat::identity(dim), dim == 2 ? "SO2" : "SO3"}};
    }
};

inline Mat apply_cocycle(const AlgebraCocycle& theta, const Mat& x) {
    if (theta.kind == AlgebraCocycle::Kind::neg_inverse) return -inverse2or3(x);
    if (theta.J.matrix.dim() != x.dim())
        throw std::domain_error("apply_cocycle: dimension mismatch");
    return theta.J.matrix * x * theta.J.matrix.transpose();
}

/// Cartan decomposition g = k (+) p into the +1 / -1 eigenspaces of an
/// involution, with the bracket inclusions [k,k] in k, [k,p] in p, [p,p] in k.
struct CartanSplit {
    std::vector<Mat> k_basis;
    std::vector<Mat> p_basis;
    AlgebraCocycle involution;
    double inclusion_residual = 0;
};

inline CartanSplit cartan_split(const LieAlgebraSpec& alg, const AlgebraCocycle& involution) {
    for (const Mat& b : alg.basis) {
        const Mat twice = apply_cocycle(involution, apply_cocycle(involution, b));
        if ((twice - b).max_abs() > 1e-12 * (1.0 + b.max_abs()))
            throw std::domain_error("cartan_split: map is not an involution on the basis");
    }
    CartanSplit split{{}, {}, involution, 0.0};
    for (const Mat& b : alg.basis) {
        const Mat image = apply_cocycle(involution, b);
        if ((image - b).max_abs() <= 1e-12 * (1.0 + b.max_abs()))
            split.k_basis.push_back(b);
        else if ((image + b).max_abs() <= 1e-12 * (1.0 + b.max_abs()))
            split.p_basis.push_back(b);
        else
            throw std::domain_error("cartan_split: basis element is not an eigenvector");
    }
    auto span_res = [&](const std::vector<Mat>& span, const Mat& x) {
        if (span.empty()) return x.max_abs();
        LieAlgebraSpec sub{alg.name, alg.dim_matrix, span, {}};
        return span_residual(sub, x);
    };
    double worst = 0;
    for (const Mat& a : split.k_basis)
        for (const Mat& b : split.k_basis)
            worst = std::max(worst, span_res(split.k_basis, commutator(a, b)));
    for (const Mat& a : split.k_basis)
        for (const Mat& b : split.p_basis)
            worst = std::max(worst, span_res(split.p_basis, commutator(a, b)));
    for (const Mat& a : split.p_basis)
        for (const Mat& b : split.p_basis)
            worst = std::max(worst, span_res(split.k_basis, commutator(a, b)));
    split.inclusion_residual = worst;
    if (worst >= 1e-12) throw std::runtime_error("cartan_split: bracket inclusions fail");
    return split;
}

/// g(t) = exp(t X) at n uniform t in [0, 2pi), per generator.
inline std::vector<GroupElement> group_sweep(const Mat& generator, const std::string& group,
                                             int n) {
    std::vector<GroupElement> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        out.push_back(make_group_element(matrix_exp(generator * t), group));
    }
    return out;
}

}  // namespace souriau
