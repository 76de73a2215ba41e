#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace souriau {

/// Thrown when a matrix that must be invertible is numerically singular.
/// Carries the offending determinant.
class singular_matrix_error : public std::runtime_error {
public:
    explicit singular_matrix_error(double det)
        : std::runtime_error("matrix is singular (det = " + std::to_string(det) + ")"),
          det_(det) {}
    double det() const noexcept { return det_; }

private:
    double det_;
};

/// Dense square matrix over T, row-major. T is double in normal use and a
/// rational type in the exact verification oracles.
template <class T>
class Matrix {
public:
    Matrix() : dim_(0) {}

    explicit Matrix(int dim) : dim_(dim), v_(static_cast<size_t>(dim) * dim, T(0)) {
        if (dim < 1) throw std::domain_error("Matrix: dim must be >= 1");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : dim_(static_cast<int>(rows.size())) {
        if (dim_ < 1) throw std::domain_error("Matrix: dim must be >= 1");
        v_.reserve(static_cast<size_t>(dim_) * dim_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != dim_)
                throw std::domain_error("Matrix: ragged initializer");
            for (const T& x : row) v_.push_back(check_finite(x));
        }
    }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix zero(int dim) { return Matrix(dim); }

    int dim() const noexcept { return dim_; }

    T& operator()(int i, int j) { return v_[static_cast<size_t>(i) * dim_ + j]; }
    const T& operator()(int i, int j) const { return v_[static_cast<size_t>(i) * dim_ + j]; }

    void set(int i, int j, const T& x) { (*this)(i, j) = check_finite(x); }

    Matrix operator+(const Matrix& o) const {
        require_same_dim(o);
        Matrix r(dim_);
        for (size_t k = 0; k < v_.size(); ++k) r.v_[k] = v_[k] + o.v_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_dim(o);
        Matrix r(dim_);
        for (size_t k = 0; k < v_.size(); ++k) r.v_[k] = v_[k] - o.v_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(dim_);
        for (size_t k = 0; k < v_.size(); ++k) r.v_[k] = -v_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_dim(o);
        Matrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < dim_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix operator*(const T& s) const {
        Matrix r(dim_);
        for (size_t k = 0; k < v_.size(); ++k) r.v_[k] = v_[k] * s;
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& m) { return m * s; }

    Matrix transpose() const {
        Matrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T t(0);
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    bool operator==(const Matrix& o) const { return dim_ == o.dim_ && v_ == o.v_; }

    /// Frobenius norm; floating-point instantiations only.
    double frobenius() const {
        static_assert(std::is_floating_point_v<T>, "frobenius requires a floating type");
        double s = 0;
        for (const T& x : v_) s += static_cast<double>(x) * static_cast<double>(x);
        return std::sqrt(s);
    }

    double max_abs() const {
        static_assert(std::is_floating_point_v<T>);
        double m = 0;
        for (const T& x : v_) m = std::max(m, std::abs(static_cast<double>(x)));
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < dim_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (int j = 0; j < dim_; ++j) os << (*this)(i, j) << (j + 1 < dim_ ? ", " : "");
            os << (i + 1 < dim_ ? ";\n" : "]");
        }
        return os.str();
    }

private:
    static T check_finite(const T& x) {
        if constexpr (std::is_floating_point_v<T>) {
            if (!std::isfinite(x)) throw std::domain_error("Matrix: non-finite entry");
        }
        return x;
    }

    void require_same_dim(const Matrix& o) const {
        if (dim_ != o.dim_) throw std::domain_error("Matrix: dimension mismatch");
    }

    int dim_;
    std::vector<T> v_;
};

using Mat = Matrix<double>;

/// Pairing scale s in <X,Y> = s * trace(X^T Y). The nominal convention is 1/2
/// (it makes <beta,beta> = a^2); s = 1 is kept as an alternative.
enum class PairingScale { half, one };

struct PairingConvention {
    PairingScale scale;
    std::string label;

    static PairingConvention half() { return {PairingScale::half, "s=1/2"}; }
    static PairingConvention one() { return {PairingScale::one, "s=1"}; }
};

template <class T>
T scale_value(PairingScale s) {
    return s == PairingScale::half ? T(1) / T(2) : T(1);
}

template <class T>
Matrix<T> commutator(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.dim() != y.dim()) throw std::domain_error("commutator: dimension mismatch");
    return x * y - y * x;
}

template <class T>
T pairing(const Matrix<T>& x, const Matrix<T>& y, const PairingConvention& conv) {
    if (x.dim() != y.dim()) throw std::domain_error("pairing: dimension mismatch");
    return scale_value<T>(conv.scale) * (x.transpose() * y).trace();
}

template <class T>
T determinant2or3(const Matrix<T>& m) {
    if (m.dim() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (m.dim() == 3)
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    throw std::domain_error("determinant2or3: dim must be 2 or 3");
}

/// Inverse by adjugate, dims 2 and 3 only. Works over rationals as well.
template <class T>
Matrix<T> inverse2or3(const Matrix<T>& m) {
    const int n = m.dim();
    if (n != 2 && n != 3) throw std::domain_error("inverse2or3: dim must be 2 or 3");
    const T det = determinant2or3(m);
    if constexpr (std::is_floating_point_v<T>) {
        double scale = std::pow(std::max(m.max_abs(), 1e-300), n);
        if (std::abs(static_cast<double>(det)) <= 1e-12 * scale)
            throw singular_matrix_error(static_cast<double>(det));
    } else {
        if (det == T(0)) throw singular_matrix_error(0.0);
    }
    Matrix<T> r(n);
    if (n == 2) {
        r(0, 0) = m(1, 1) / det;
        r(0, 1) = -m(0, 1) / det;
        r(1, 0) = -m(1, 0) / det;
        r(1, 1) = m(0, 0) / det;
    } else {
        auto cof = [&](int i, int j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = cof(j, i) / det;  // adjugate transpose
    }
    return r;
}

inline bool is_skew(const Mat& m, double tol = 1e-12) {
    return (m + m.transpose()).max_abs() <= tol * (1.0 + m.max_abs());
}

/// Matrix exponential. Skew 2x2 and 3x3 inputs go through the closed rotation
/// formulas (planar rotation / Rodrigues); everything else falls back to
/// scaling-and-squaring with a series truncated at relative 1e-13.
inline Mat matrix_exp(const Mat& x) {
    const int n = x.dim();
    if (n == 2 && is_skew(x)) {
        const double t = x(1, 0);
        return Mat{{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}};
    }
    if (n == 3 && is_skew(x)) {
        // Rodrigues: theta = |axis|, R = I + sin(theta)/theta K + (1-cos)/theta^2 K^2
        const double w1 = x(2, 1), w2 = x(0, 2), w3 = x(1, 0);
        const double theta = std::sqrt(w1 * w1 + w2 * w2 + w3 * w3);
        Mat r = Mat::identity(3);
        if (theta < 1e-30) return r;
        const double s = std::sin(theta) / theta;
        const double c = (1.0 - std::cos(theta)) / (theta * theta);
        const Mat x2 = x * x;
        return r + x * s + x2 * c;
    }
    // scaling and squaring
    int squarings = 0;
    double norm = x.max_abs() * n;
    Mat y = x;
    while (norm > 0.5) {
        y = y * 0.5;
        norm *= 0.5;
        ++squarings;
    }
    Mat result = Mat::identity(n);
    Mat term = Mat::identity(n);
    for (int k = 1; k < 60; ++k) {
        term = term * y * (1.0 / k);
        result = result + term;
        if (term.max_abs() < 1e-13 * std::max(result.max_abs(), 1.0)) break;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

/// Solve A x = b by Gaussian elimination with partial pivoting (small systems).
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14)
            throw std::domain_error("solve_dense: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

}  // namespace souriau
