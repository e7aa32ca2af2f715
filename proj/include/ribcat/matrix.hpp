#pragma once

#include <complex>
#include <vector>

#include "ribcat/errors.hpp"
#include "ribcat/scalar.hpp"

namespace ribcat {

/// Dense row-major matrix over Scalar or std::complex<double>.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw ComputeError("matrix product: dimension mismatch");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& v = x(i, k);
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r(i, j) = r(i, j) + v * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ComputeError("matrix sum: shape mismatch");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ComputeError("matrix difference: shape mismatch");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r = m;
        for (auto& v : r.a_) v = s * v;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Gauss-Jordan with partial pivoting by evaluated magnitude.
    Matrix inverse() const {
        if (rows_ != cols_) throw ComputeError("matrix inverse: not square");
        const std::size_t n = rows_;
        Matrix a = *this;
        Matrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            double best = magnitude_(a(col, col));
            for (std::size_t r = col + 1; r < n; ++r) {
                const double m = magnitude_(a(r, col));
                if (m > best) {
                    best = m;
                    piv = r;
                }
            }
            if (best == 0.0) throw ComputeError("matrix inverse: singular matrix");
            if (piv != col) {
                a.swap_rows_(piv, col);
                inv.swap_rows_(piv, col);
            }
            const T d = a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) = a(col, j) / d;
                inv(col, j) = inv(col, j) / d;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                const T f = a(r, col);
                if (is_zero_(f)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    a(r, j) = a(r, j) - f * a(col, j);
                    inv(r, j) = inv(r, j) - f * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    static double magnitude_(const Scalar& s) { return std::abs(approx(s)); }
    static double magnitude_(const std::complex<double>& z) { return std::abs(z); }
    static bool is_zero_(const Scalar& s) { return s.is_zero(); }
    static bool is_zero_(const std::complex<double>& z) { return z == std::complex<double>(0, 0); }
    void swap_rows_(std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
    }

    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using ScalarMatrix = Matrix<Scalar>;
using ComplexMatrix = Matrix<std::complex<double>>;

inline ComplexMatrix to_complex(const ScalarMatrix& m) {
    ComplexMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = approx(m(i, j));
    return r;
}

inline ComplexMatrix conjugate_transpose(const ComplexMatrix& m) {
    ComplexMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

inline double max_abs(const ComplexMatrix& m) {
    double worst = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

inline double max_abs_diff(const ScalarMatrix& x, const ScalarMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw ComputeError("max_abs_diff: shape mismatch");
    double worst = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            worst = std::max(worst, std::abs(approx(x(i, j)) - approx(y(i, j))));
    return worst;
}

inline bool near_equal(const ScalarMatrix& x, const ScalarMatrix& y, Tolerance tol = {}) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (!near_equal(x(i, j), y(i, j), tol)) return false;
    return true;
}

/// Spectral norm via power iteration on A^dag A.
inline double operator_norm(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    const ComplexMatrix g = conjugate_transpose(m) * m;
    const std::size_t n = g.rows();
    std::vector<std::complex<double>> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.25 * static_cast<double>(i % 7);
    double lambda = 0;
    for (int it = 0; it < 300; ++it) {
        std::vector<std::complex<double>> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += g(i, j) * v[j];
        double norm = 0;
        for (const auto& z : w) norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (auto& z : w) z /= norm;
        lambda = norm;
        v = std::move(w);
    }
    return std::sqrt(lambda);
}

inline std::complex<double> determinant(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ComputeError("determinant: not square");
    ComplexMatrix a = m;
    const std::size_t n = a.rows();
    std::complex<double> det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                piv = r;
            }
        if (best == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::complex<double> f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

}  // namespace ribcat
