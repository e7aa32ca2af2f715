#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ribcat/matrix.hpp"
#include "ribcat/report.hpp"
#include "ribcat/skeletal.hpp"
#include "ribcat/treecalc.hpp"

namespace ribcat {

/// Quantum dimensions d_a = tr(id_a) under the loaded pivotal structure.
inline std::vector<Scalar> quantum_dimensions(const SkeletalData& data) {
    std::vector<Scalar> dims;
    for (std::size_t a = 0; a < data.ring().rank(); ++a)
        dims.push_back(quantum_trace(identity_on({a}, data), data));
    return dims;
}

/// Unnormalized modular data. Convention:
///   S~_{ab} = sum_c N[a][b][c] (theta_c / theta_a theta_b) d_c,  T = diag(theta),
///   p+- = sum_a theta_a^{+-1} d_a^2,  D^2 = sum_a d_a^2.
struct ModularData {
    std::vector<Scalar> qdims;
    Scalar global_dim_sq;
    ScalarMatrix s_tilde;
    ScalarMatrix t;
    Scalar gauss_plus;
    Scalar gauss_minus;
    bool modular = false;  // S~ invertible
};

inline ModularData s_t_matrices(const SkeletalData& data) {
    if (!data.has_twist()) throw ComputeError("modular data requires twists");
    const FusionRing& ring = data.ring();
    const std::size_t r = ring.rank();
    ModularData md;
    md.qdims = quantum_dimensions(data);
    md.global_dim_sq = Scalar::zero();
    md.gauss_plus = Scalar::zero();
    md.gauss_minus = Scalar::zero();
    for (std::size_t a = 0; a < r; ++a) {
        const Scalar d2 = md.qdims[a] * md.qdims[a];
        md.global_dim_sq = md.global_dim_sq + d2;
        md.gauss_plus = md.gauss_plus + data.twist(a) * d2;
        md.gauss_minus = md.gauss_minus + data.twist(a).inverse() * d2;
    }
    md.s_tilde = ScalarMatrix(r, r);
    md.t = ScalarMatrix(r, r);
    for (std::size_t a = 0; a < r; ++a) {
        md.t(a, a) = data.twist(a);
        for (std::size_t b = 0; b < r; ++b) {
            Scalar acc = Scalar::zero();
            for (std::size_t c = 0; c < r; ++c) {
                if (!ring.admissible(a, b, c)) continue;
                acc = acc + data.twist(c) * (data.twist(a) * data.twist(b)).inverse() * md.qdims[c];
            }
            md.s_tilde(a, b) = acc;
        }
    }
    md.modular = std::abs(determinant(to_complex(md.s_tilde))) > 1e-9;
    return md;
}

/// Labels transparent to everything, decided by the exact channel criterion
/// R^{ab}_c R^{ba}_c = 1 on every admissible channel. Cross-checked by
/// callers against the S~ criterion S~_{ab} = d_a d_b.
inline std::vector<std::size_t> muger_center(const SkeletalData& data, Tolerance tol = {}) {
    if (!data.braided()) throw ComputeError("Muger center requires R data");
    const FusionRing& ring = data.ring();
    std::vector<std::size_t> center;
    for (std::size_t a = 0; a < ring.rank(); ++a) {
        bool transparent = true;
        for (std::size_t b = 0; transparent && b < ring.rank(); ++b)
            for (std::size_t c = 0; transparent && c < ring.rank(); ++c) {
                if (!ring.admissible(a, b, c)) continue;
                if (!near_equal(data.R(a, b, c) * data.R(b, a, c), Scalar::one(), tol)) transparent = false;
            }
        if (transparent) center.push_back(a);
    }
    return center;
}

/// Center membership via S~_{ab} = d_a d_b for all b (redundant code path
/// used as an oracle against the channel criterion).
inline std::vector<std::size_t> muger_center_via_s(const SkeletalData& data, Tolerance tol = {}) {
    const ModularData md = s_t_matrices(data);
    std::vector<std::size_t> center;
    for (std::size_t a = 0; a < data.ring().rank(); ++a) {
        bool transparent = true;
        for (std::size_t b = 0; transparent && b < data.ring().rank(); ++b)
            if (!near_equal(md.s_tilde(a, b), md.qdims[a] * md.qdims[b], tol)) transparent = false;
        if (transparent) center.push_back(a);
    }
    return center;
}

/// Side-by-side report on center triviality and the dimensions of transparent
/// simples. No claim about the braiding <-> trivial-center equivalence is
/// asserted; the computed predicates are just presented together.
struct CenterReport {
    std::vector<std::size_t> center;
    std::vector<std::size_t> center_via_s;
    bool criteria_agree = false;
    bool trivial = false;
    struct TransparentItem {
        std::size_t label;
        Scalar dim;
        bool dim_sq_equals_dim;
        bool abs_dim_is_one;
    };
    std::vector<TransparentItem> transparent;
    bool hermitian = false;       // filled by the caller from the positivity classification
    std::string hermitian_note;
};

inline CenterReport center_report(const SkeletalData& data, Tolerance tol = {}) {
    CenterReport rep;
    rep.center = muger_center(data, tol);
    rep.center_via_s = muger_center_via_s(data, tol);
    rep.criteria_agree = rep.center == rep.center_via_s;
    rep.trivial = rep.center.size() == 1 && rep.center[0] == 0;
    const auto dims = quantum_dimensions(data);
    for (std::size_t a : rep.center) {
        const Scalar d = dims[a];
        CenterReport::TransparentItem item{
            a, d, near_equal(d * d, d, tol), std::abs(std::abs(approx(d)) - 1.0) <= tol.eps};
        rep.transparent.push_back(item);
    }
    return rep;
}

}  // namespace ribcat
