#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "ribcat/errors.hpp"
#include "ribcat/matrix.hpp"

namespace ribcat {

using Cplx = std::complex<double>;

/// Sparse multivariate polynomial over complex doubles; exponent vectors are
/// the map keys. Small systems only (the hexagon unknowns).
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, Cplx c) {
        MPoly p(nvars);
        if (c != Cplx(0)) p.terms_[std::vector<unsigned>(nvars, 0)] = c;
        return p;
    }
    static MPoly variable(std::size_t nvars, std::size_t i) {
        MPoly p(nvars);
        std::vector<unsigned> e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = 1.0;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero(double eps = 0.0) const {
        for (const auto& [e, c] : terms_)
            if (std::abs(c) > eps) return false;
        return true;
    }
    bool is_constant(double eps = 1e-13) const {
        for (const auto& [e, c] : terms_) {
            if (std::abs(c) <= eps) continue;
            for (unsigned x : e)
                if (x > 0) return false;
        }
        return true;
    }
    const std::map<std::vector<unsigned>, Cplx>& terms() const { return terms_; }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term_(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term_(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<unsigned> e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term_(e, ca * cb);
            }
        return r;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_)
            if (std::abs(c) > 1e-13) d = std::max(d, e[var]);
        return d;
    }

    bool involves_only(std::size_t var) const {
        for (const auto& [e, c] : terms_) {
            if (std::abs(c) <= 1e-13) continue;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (i != var && e[i] > 0) return false;
        }
        return true;
    }

    std::optional<std::size_t> sole_variable() const {
        std::optional<std::size_t> found;
        for (const auto& [e, c] : terms_) {
            if (std::abs(c) <= 1e-13) continue;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (found && *found != i) return std::nullopt;
                found = i;
            }
        }
        return found;
    }

    /// Ascending coefficient list of a univariate polynomial in var.
    std::vector<Cplx> univariate_coeffs(std::size_t var) const {
        std::vector<Cplx> out(degree_in(var) + 1, Cplx(0));
        for (const auto& [e, c] : terms_) out[e[var]] += c;
        return out;
    }

    /// Split as A*x_var + B where neither A nor B involves x_var; requires
    /// degree_in(var) <= 1.
    std::pair<MPoly, MPoly> linear_split(std::size_t var) const {
        MPoly a(nvars_), b(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) {
                b.add_term_(e, c);
            } else {
                std::vector<unsigned> f = e;
                f[var] = 0;
                a.add_term_(f, c);
            }
        }
        return {a, b};
    }

    MPoly substitute(std::size_t var, Cplx value) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            std::vector<unsigned> f = e;
            Cplx coeff = c;
            for (unsigned k = 0; k < e[var]; ++k) coeff *= value;
            f[var] = 0;
            r.add_term_(f, coeff);
        }
        return r;
    }

    Cplx eval(const std::vector<Cplx>& x) const {
        Cplx acc = 0;
        for (const auto& [e, c] : terms_) {
            Cplx t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    MPoly derivative(std::size_t var) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            std::vector<unsigned> f = e;
            f[var] -= 1;
            r.add_term_(f, c * static_cast<double>(e[var]));
        }
        return r;
    }

private:
    void add_term_(const std::vector<unsigned>& e, Cplx c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != Cplx(0)) terms_[e] = c;
        } else {
            it->second += c;
            if (std::abs(it->second) == 0.0) terms_.erase(it);
        }
    }

    std::size_t nvars_ = 0;
    std::map<std::vector<unsigned>, Cplx> terms_;
};

/// All complex roots of a univariate polynomial (ascending coefficients) by
/// the Durand-Kerner iteration, then Newton-polished.
inline std::vector<Cplx> polynomial_roots(std::vector<Cplx> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) < 1e-13) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    const std::size_t n = coeffs.size() - 1;
    const Cplx lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    auto eval = [&](Cplx z) {
        Cplx acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
        return acc;
    };
    auto deriv = [&](Cplx z) {
        Cplx acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 1;) acc = acc * z + coeffs[i] * static_cast<double>(i);
        return acc;
    };

    std::vector<Cplx> roots(n);
    for (std::size_t i = 0; i < n; ++i)
        roots[i] = std::polar(0.7 + 0.1 * static_cast<double>(i % 3), 0.4 + 2.7 * static_cast<double>(i));
    for (int it = 0; it < 600; ++it) {
        double moved = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Cplx denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            if (std::abs(denom) < 1e-300) continue;
            const Cplx delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    for (auto& z : roots)
        for (int it = 0; it < 60; ++it) {
            const Cplx d = deriv(z);
            if (std::abs(d) < 1e-300) break;
            const Cplx step = eval(z) / d;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
    std::sort(roots.begin(), roots.end(), [](Cplx a, Cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

/// Gauss-Newton polish of a polynomial system at a candidate point. Returns
/// the final max residual.
inline double polish_system(const std::vector<MPoly>& system, std::vector<Cplx>& x, int iters = 80) {
    const std::size_t nv = x.size();
    for (int it = 0; it < iters; ++it) {
        ComplexMatrix jac(system.size(), nv);
        ComplexMatrix rhs(system.size(), 1);
        double resid = 0;
        for (std::size_t i = 0; i < system.size(); ++i) {
            const Cplx v = system[i].eval(x);
            rhs(i, 0) = -v;
            resid = std::max(resid, std::abs(v));
            for (std::size_t j = 0; j < nv; ++j) jac(i, j) = system[i].derivative(j).eval(x);
        }
        if (resid < 1e-15) break;
        // normal equations J^H J dx = J^H r with Tikhonov floor
        ComplexMatrix jh = conjugate_transpose(jac);
        ComplexMatrix a = jh * jac;
        for (std::size_t d = 0; d < nv; ++d) a(d, d) += 1e-14;
        ComplexMatrix b = jh * rhs;
        ComplexMatrix dx;
        try {
            dx = a.inverse() * b;
        } catch (const ComputeError&) {
            break;
        }
        double step = 0;
        for (std::size_t j = 0; j < nv; ++j) {
            x[j] += dx(j, 0);
            step = std::max(step, std::abs(dx(j, 0)));
        }
        if (step < 1e-16) break;
    }
    double resid = 0;
    for (const auto& p : system) resid = std::max(resid, std::abs(p.eval(x)));
    return resid;
}

}  // namespace ribcat
