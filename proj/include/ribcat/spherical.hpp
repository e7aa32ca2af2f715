#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "ribcat/errors.hpp"
#include "ribcat/modular.hpp"
#include "ribcat/skeletal.hpp"
#include "ribcat/treecalc.hpp"

namespace ribcat {

/// Pivotal coefficients t_a (t_0 = 1), monoidal over fusion channels:
/// t_a t_b = t_c whenever N[a][b][c] = 1.
struct PivotalStructure {
    std::vector<Scalar> t;
};

namespace detail {

/// Smith normal form of an integer matrix: U * M * V = D with U, V
/// unimodular. Returns D's diagonal and V (we only need V to map solutions
/// back to the original coordinates).
struct Snf {
    std::vector<long long> diag;                    // min(rows, cols) entries
    std::vector<std::vector<long long>> v;          // cols x cols unimodular
};

inline Snf smith_normal_form(std::vector<std::vector<long long>> m, std::size_t cols) {
    const std::size_t rows = m.size();
    Snf out;
    out.v.assign(cols, std::vector<long long>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) out.v[i][i] = 1;

    auto swap_rows = [&](std::size_t a, std::size_t b) { std::swap(m[a], m[b]); };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& row : m) std::swap(row[a], row[b]);
        for (auto& row : out.v) std::swap(row[a], row[b]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, long long k) {
        for (std::size_t j = 0; j < cols; ++j) m[dst][j] += k * m[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, long long k) {
        for (auto& row : m) row[dst] += k * row[src];
        for (auto& row : out.v) row[dst] += k * row[src];
    };

    const std::size_t n = std::min(rows, cols);
    for (std::size_t p = 0; p < n; ++p) {
        // find smallest nonzero pivot in the remaining block
        while (true) {
            std::size_t pi = p, pj = p;
            long long best = 0;
            for (std::size_t i = p; i < rows; ++i)
                for (std::size_t j = p; j < cols; ++j)
                    if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < std::abs(best))) {
                        best = m[i][j];
                        pi = i;
                        pj = j;
                    }
            if (best == 0) break;
            if (pi != p) swap_rows(pi, p);
            if (pj != p) swap_cols(pj, p);
            bool cleared = true;
            for (std::size_t i = p + 1; i < rows; ++i)
                if (m[i][p] != 0) {
                    add_row(i, p, -(m[i][p] / m[p][p]));
                    if (m[i][p] != 0) cleared = false;
                }
            for (std::size_t j = p + 1; j < cols; ++j)
                if (m[p][j] != 0) {
                    add_col(j, p, -(m[p][j] / m[p][p]));
                    if (m[p][j] != 0) cleared = false;
                }
            if (cleared) break;
        }
        if (m[p][p] < 0) {
            for (auto& row : m) row[p] = -row[p];
            for (auto& row : out.v) row[p] = -row[p];
        }
    }
    out.diag.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) out.diag[p] = m[p][p];
    return out;
}

}  // namespace detail

/// All solutions of the monoidality system t_a t_b = t_c (t_0 = 1, t_a != 0).
/// The multiplicative system is solved through the Smith normal form of the
/// relation lattice, so each t_a comes out as an exact root of unity and the
/// list is complete. Deterministic lexicographic order.
inline std::vector<PivotalStructure> enumerate_pivotal(const SkeletalData& data) {
    const FusionRing& ring = data.ring();
    const std::size_t r = ring.rank();
    if (r > 12) throw ComputeError("enumerate_pivotal supports rank <= 12");
    if (r == 1) return {PivotalStructure{{Scalar::one()}}};

    const std::size_t nv = r - 1;  // unknowns t_1 .. t_{r-1}
    std::vector<std::vector<long long>> rel;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) {
                if (!ring.admissible(a, b, c)) continue;
                std::vector<long long> row(nv, 0);
                if (a > 0) row[a - 1] += 1;
                if (b > 0) row[b - 1] += 1;
                if (c > 0) row[c - 1] -= 1;
                if (std::any_of(row.begin(), row.end(), [](long long x) { return x != 0; }))
                    rel.push_back(std::move(row));
            }
    if (rel.empty()) rel.push_back(std::vector<long long>(nv, 0));

    const auto snf = detail::smith_normal_form(rel, nv);

    // orders of the cyclic factors; a zero diagonal entry (or an unconstrained
    // coordinate) would mean infinitely many solutions
    std::vector<long long> orders(nv, 0);
    for (std::size_t i = 0; i < nv; ++i)
        orders[i] = i < snf.diag.size() ? snf.diag[i] : 0;
    for (long long d : orders)
        if (d == 0)
            throw ComputeError("enumerate_pivotal: infinitely many pivotal structures (free character)");

    long long conductor = 1;
    for (long long d : orders) conductor = std::lcm(conductor, d);

    std::vector<PivotalStructure> out;
    std::vector<long long> choice(nv, 0);
    while (true) {
        // With U M V = D the substitution t_j = prod_k u_k^{V[j][k]} turns the
        // relations into u_k^{d_k} = 1, so u_k = zeta_{d_k}^{choice_k}.
        PivotalStructure p;
        p.t.assign(r, Scalar::one());
        for (std::size_t j = 0; j < nv; ++j) {
            long long exponent = 0;  // in units of zeta_conductor
            for (std::size_t k = 0; k < nv; ++k)
                exponent += (conductor / orders[k]) * choice[k] * snf.v[j][k];
            p.t[j + 1] = Scalar::root_of_unity(static_cast<unsigned>(conductor), exponent);
        }
        out.push_back(std::move(p));
        std::size_t k = 0;
        for (; k < nv; ++k) {
            if (++choice[k] < orders[k]) break;
            choice[k] = 0;
        }
        if (k == nv) break;
    }

    // deterministic order: lexicographic by evaluated coordinates
    std::sort(out.begin(), out.end(), [](const PivotalStructure& x, const PivotalStructure& y) {
        for (std::size_t i = 0; i < x.t.size(); ++i) {
            const auto zx = approx(x.t[i]), zy = approx(y.t[i]);
            if (std::abs(zx.real() - zy.real()) > 1e-10) return zx.real() < zy.real();
            if (std::abs(zx.imag() - zy.imag()) > 1e-10) return zx.imag() < zy.imag();
        }
        return false;
    });
    // drop duplicates (distinct character coordinates can map to equal t)
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PivotalStructure& x, const PivotalStructure& y) {
                              for (std::size_t i = 0; i < x.t.size(); ++i)
                                  if (!exact_equal(x.t[i], y.t[i])) return false;
                              return true;
                          }),
              out.end());
    return out;
}

/// Per-structure left/right quantum dimensions and the sphericality verdict;
/// confirms or refutes uniqueness per input category. Also locates the
/// ribbon-induced candidate: the structure whose dimensions satisfy
/// d_a [F^{a a* a}_a]_{00} = theta_a R^{a a*}_0 for every label.
struct SphericalReport {
    struct Item {
        PivotalStructure pivotal;
        std::vector<Scalar> left_dims;
        std::vector<Scalar> right_dims;
        bool spherical = false;
    };
    std::vector<Item> items;
    int spherical_count = 0;
    std::optional<std::size_t> ribbon_candidate;  // index into items
    bool unique_spherical() const { return spherical_count == 1; }
};

inline SphericalReport spherical_report(const SkeletalData& data, Tolerance tol = {}) {
    const FusionRing& ring = data.ring();
    SphericalReport rep;
    for (const auto& pivotal : enumerate_pivotal(data)) {
        SkeletalData variant(ring, data.f_table(), data.r_table(), data.twist_vector(), pivotal.t,
                             data.mode());
        SphericalReport::Item item;
        item.pivotal = pivotal;
        item.spherical = true;
        for (std::size_t a = 0; a < ring.rank(); ++a) {
            const Scalar right = compose(evaluation_right(a, variant), coevaluation(a, variant)).mat(0, 0);
            const Scalar left = compose(evaluation(a, variant), coevaluation_right(a, variant)).mat(0, 0);
            item.right_dims.push_back(right);
            item.left_dims.push_back(left);
            if (!near_equal(left, right, tol)) item.spherical = false;
        }
        if (item.spherical) ++rep.spherical_count;
        rep.items.push_back(std::move(item));
    }

    if (data.braided() && data.has_twist()) {
        for (std::size_t i = 0; i < rep.items.size(); ++i) {
            bool match = true;
            for (std::size_t a = 0; a < ring.rank() && match; ++a) {
                const Scalar lhs = rep.items[i].right_dims[a] * data.F(a, ring.dual(a), a, a, 0, 0);
                const Scalar rhs = data.twist(a) * data.R(a, ring.dual(a), 0);
                if (!near_equal(lhs, rhs, tol)) match = false;
            }
            if (match) {
                rep.ribbon_candidate = i;
                break;
            }
        }
    }
    return rep;
}

}  // namespace ribcat
