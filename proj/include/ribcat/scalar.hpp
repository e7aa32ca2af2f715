#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ribcat/errors.hpp"

namespace ribcat {

using Rational = boost::multiprecision::cpp_rational;

/// Comparison tolerance for approximate-mode scalars. Exact-mode comparisons
/// ignore it.
struct Tolerance {
    double eps = 1e-9;
};

namespace detail {

// Monic cyclotomic polynomial coefficients Phi_n, ascending degree.
// Computed by dividing x^n - 1 by all Phi_d with d | n, d < n.
inline const std::vector<Rational>& cyclotomic_poly(unsigned n) {
    static std::map<unsigned, std::vector<Rational>> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1
    std::vector<Rational> num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi_d = cyclotomic_poly(d);
        // exact polynomial division num /= phi_d
        std::vector<Rational> quot(num.size() - phi_d.size() + 1, Rational(0));
        std::vector<Rational> rem = num;
        for (std::size_t i = quot.size(); i-- > 0;) {
            Rational c = rem[i + phi_d.size() - 1];  // phi_d is monic
            quot[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < phi_d.size(); ++j)
                rem[i + j] -= c * phi_d[j];
        }
        num = std::move(quot);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

inline unsigned lcm_u(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm<std::uint64_t>(a, b));
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace detail

/// A scalar from the ground field: either an exact element of the cyclotomic
/// field Q(zeta_n), stored as a dense rational coefficient vector over the
/// basis {zeta_n^k : 0 <= k < n}, or a complex double when exactness is
/// unavailable. Exact vectors are kept reduced modulo Phi_n, so equal field
/// elements have equal representations (for a fixed conductor).
///
/// Values are immutable after construction.
class Scalar {
public:
    Scalar() : exact_(true), n_(1), c_(1, Rational(0)) {}
    Scalar(long long v) : exact_(true), n_(1), c_(1, Rational(v)) {}  // NOLINT(implicit)

    static Scalar rational(Rational q) {
        Scalar s;
        s.c_[0] = std::move(q);
        return s;
    }
    static Scalar rational(long long p, long long q) {
        if (q == 0) throw LoadError("rational with zero denominator");
        return rational(Rational(p, q));
    }
    /// zeta_n^k
    static Scalar root_of_unity(unsigned n, long long k) {
        if (n == 0) throw LoadError("root_of_unity: conductor must be >= 1");
        Scalar s;
        s.n_ = n;
        s.c_.assign(n, Rational(0));
        long long kk = ((k % n) + n) % n;
        s.c_[static_cast<std::size_t>(kk)] = 1;
        s.reduce_();
        return s;
    }
    static Scalar approximate(std::complex<double> z) {
        Scalar s;
        s.exact_ = false;
        s.z_ = z;
        return s;
    }
    static Scalar approximate(double re, double im) { return approximate({re, im}); }
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    /// Exact element with explicit coefficients c[k] on zeta_n^k.
    static Scalar cyclotomic(unsigned n, std::vector<Rational> coeffs) {
        if (n == 0) throw LoadError("cyclotomic: conductor must be >= 1");
        if (coeffs.size() > n) throw LoadError("cyclotomic: coefficient list longer than conductor");
        Scalar s;
        s.n_ = n;
        s.c_ = std::move(coeffs);
        s.c_.resize(n, Rational(0));
        s.reduce_();
        return s;
    }

    bool exact() const { return exact_; }
    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    std::complex<double> to_complex() const {
        if (!exact_) return z_;
        std::complex<double> z = 0;
        for (unsigned k = 0; k < n_; ++k) {
            if (c_[k] == 0) continue;
            const double arg = 2.0 * std::numbers::pi * k / n_;
            z += detail::to_double(c_[k]) * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return z;
    }

    bool is_zero() const {
        if (exact_) return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
        return z_ == std::complex<double>(0, 0);
    }

    /// Exact scalars reduced mod Phi_n are rational iff only the constant
    /// coefficient survives.
    bool is_rational() const {
        if (!exact_) return false;
        for (unsigned k = 1; k < n_; ++k)
            if (c_[k] != 0) return false;
        return true;
    }
    Rational rational_value() const {
        if (!is_rational()) throw ComputeError("scalar is not rational");
        return c_[0];
    }

    Scalar conj() const {
        if (!exact_) return approximate(std::conj(z_));
        Scalar s;
        s.n_ = n_;
        s.c_.assign(n_, Rational(0));
        for (unsigned k = 0; k < n_; ++k)
            s.c_[(n_ - k) % n_] = c_[k];
        s.reduce_();
        return s;
    }

    /// Galois automorphism zeta -> zeta^m, gcd(m, n) = 1. Exact mode only.
    Scalar galois(unsigned m) const {
        if (!exact_) throw ComputeError("galois automorphism requires exact mode");
        Scalar s;
        s.n_ = n_;
        s.c_.assign(n_, Rational(0));
        for (unsigned k = 0; k < n_; ++k)
            s.c_[static_cast<std::size_t>((static_cast<std::uint64_t>(k) * m) % n_)] += c_[k];
        s.reduce_();
        return s;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) {
            auto [x, y] = lifted_(a, b);
            for (unsigned k = 0; k < x.n_; ++k) x.c_[k] += y.c_[k];
            x.reduce_();
            return x;
        }
        return approximate(a.to_complex() + b.to_complex());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    Scalar operator-() const {
        if (!exact_) return approximate(-z_);
        Scalar s = *this;
        for (auto& q : s.c_) q = -q;
        return s;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) {
            auto [x, y] = lifted_(a, b);
            Scalar r;
            r.n_ = x.n_;
            r.c_.assign(x.n_, Rational(0));
            for (unsigned i = 0; i < x.n_; ++i) {
                if (x.c_[i] == 0) continue;
                for (unsigned j = 0; j < y.n_; ++j) {
                    if (y.c_[j] == 0) continue;
                    r.c_[(i + j) % r.n_] += x.c_[i] * y.c_[j];
                }
            }
            r.reduce_();
            return r;
        }
        return approximate(a.to_complex() * b.to_complex());
    }

    Scalar inverse() const {
        if (is_zero()) throw ComputeError("inverse of zero scalar");
        if (!exact_) return approximate(1.0 / z_);
        if (is_rational()) return rational(Rational(1) / c_[0]);
        // Product of the nontrivial Galois conjugates; s * t is the rational norm.
        Scalar t = Scalar::one();
        for (unsigned m = 2; m < n_; ++m) {
            if (std::gcd(m, n_) != 1) continue;
            t = t * galois(m);
        }
        Scalar norm = (*this) * t;
        if (!norm.is_rational() || norm.c_[0] == 0)
            throw ComputeError("cyclotomic inverse: norm computation failed");
        return t * rational(Rational(1) / norm.c_[0]);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc = Scalar::one();
        Scalar base = *this;
        for (unsigned long long k = static_cast<unsigned long long>(e); k > 0; k >>= 1) {
            if (k & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }

    /// |s| = 1, exactly (s * conj(s) == 1) in exact mode.
    bool unit_modulus(double eps = 1e-9) const {
        if (exact_) {
            Scalar p = (*this) * conj();
            return p.is_rational() && p.c_[0] == 1;
        }
        return std::abs(std::abs(z_) - 1.0) <= eps;
    }

    /// Exact mode: some power up to lcm(2, n) equals 1. Approximate mode:
    /// recorded as a modulus check only.
    bool is_root_of_unity(double eps = 1e-9) const {
        if (is_zero()) return false;
        if (!exact_) return std::abs(std::abs(z_) - 1.0) <= eps;
        const unsigned bound = detail::lcm_u(2, n_);
        Scalar p = pow(bound);
        return p.is_rational() && p.c_[0] == 1;
    }

    std::string str() const {
        std::ostringstream os;
        if (!exact_) {
            os.precision(12);
            os << z_.real();
            if (z_.imag() >= 0) os << "+";
            os << z_.imag() << "i";
            return os.str();
        }
        bool first = true;
        for (unsigned k = 0; k < n_; ++k) {
            if (c_[k] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[k] << ")";
            if (k > 0) os << "*z" << n_ << "^" << k;
        }
        if (first) os << "0";
        return os.str();
    }

    friend bool exact_equal(const Scalar& a, const Scalar& b) {
        if (!a.exact_ || !b.exact_) return false;
        auto [x, y] = lifted_(a, b);
        return x.c_ == y.c_;
    }

private:
    static std::pair<Scalar, Scalar> lifted_(const Scalar& a, const Scalar& b) {
        if (a.n_ == b.n_) return {a, b};
        const unsigned m = detail::lcm_u(a.n_, b.n_);
        return {a.lift_(m), b.lift_(m)};
    }
    Scalar lift_(unsigned m) const {
        Scalar s;
        s.n_ = m;
        s.c_.assign(m, Rational(0));
        const unsigned step = m / n_;
        for (unsigned k = 0; k < n_; ++k) s.c_[k * step] = c_[k];
        s.reduce_();
        return s;
    }
    // Remainder modulo Phi_n; canonical form has degree < deg(Phi_n).
    void reduce_() {
        const auto& phi = detail::cyclotomic_poly(n_);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t i = c_.size(); i-- > deg;) {
            Rational c = c_[i];
            if (c == 0) continue;
            c_[i] = 0;
            for (std::size_t j = 0; j < deg; ++j)
                c_[i - deg + j] -= c * phi[j];
        }
    }

    bool exact_ = true;
    unsigned n_ = 1;
    std::vector<Rational> c_;           // exact mode
    std::complex<double> z_{0.0, 0.0};  // approximate mode
};

/// Complex conjugation; maps zeta_n^k to zeta_n^{n-k} in exact mode.
inline Scalar conjugate(const Scalar& s) { return s.conj(); }

/// Complex-float evaluation, linear over coefficients.
inline std::complex<double> approx(const Scalar& s) { return s.to_complex(); }

/// True iff exact representations agree (both exact) or the evaluations are
/// within tol.eps of each other.
inline bool near_equal(const Scalar& a, const Scalar& b, Tolerance tol = {}) {
    if (a.exact() && b.exact()) return exact_equal(a, b);
    return std::abs(approx(a) - approx(b)) <= tol.eps;
}

/// Parse "p/q" or "p".
inline Rational parse_rational(const std::string& text) {
    boost::multiprecision::cpp_int p, q = 1;
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            p = boost::multiprecision::cpp_int(text);
        } else {
            p = boost::multiprecision::cpp_int(text.substr(0, slash));
            q = boost::multiprecision::cpp_int(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw LoadError("cannot parse rational: " + text);
    }
    if (q == 0) throw LoadError("rational with zero denominator: " + text);
    return Rational(p, q);
}

inline std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

}  // namespace ribcat
