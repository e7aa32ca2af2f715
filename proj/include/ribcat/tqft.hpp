#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "ribcat/errors.hpp"
#include "ribcat/modular.hpp"
#include "ribcat/report.hpp"
#include "ribcat/skeletal.hpp"

namespace ribcat {

/// Closed orientable genus-g surface with optional labeled punctures.
struct SurfaceSpec {
    unsigned genus = 0;
    std::vector<std::size_t> punctures;
};

/// Closed 3-manifold presented by surgery on a framed unlink; the linking
/// matrix is diag(framings).
struct SurgerySpec {
    std::vector<long long> framings;
};

/// Invariant value together with the normalization bookkeeping: the value
/// times D^{components+1} times (p+/D)^{signature} recovers the raw product
/// of per-component sums.
struct TqftReport {
    std::complex<double> value;
    std::complex<double> raw_product;
    double d = 0.0;  // positive square root of the global dimension
    int signature = 0;
    std::complex<double> anomaly_factor;  // (p+/D)^{-signature}
    int d_exponent = 0;                   // power of D applied (negative)
};

struct StateSpaceResult {
    long long dim = 0;
    double pre_rounding_residual = 0.0;
    bool modular = true;  // false: the Verlinde-type value is reported with a warning
};

/// Verlinde-type state-space dimension
///   sum_a (D/d_a)^{2g-2} prod_i S~_{a,lambda_i} / S~_{a,0}
/// rounded from a numerically integral value. Punctured or higher-genus
/// values must land within 1e-6 of an integer, else the input data is
/// inconsistent and an integrality error is raised.
inline StateSpaceResult state_space_dim(const SurfaceSpec& surface, const SkeletalData& data) {
    if (surface.genus > 6) throw ComputeError("genus exceeds the desk-scale cap of 6");
    if (surface.punctures.size() > 6) throw ComputeError("puncture count exceeds the desk-scale cap of 6");
    for (std::size_t l : surface.punctures)
        if (l >= data.ring().rank()) throw LoadError("unknown puncture label index");

    const ModularData md = s_t_matrices(data);
    const std::size_t r = data.ring().rank();
    const double d_total = std::sqrt(approx(md.global_dim_sq).real());
    std::complex<double> acc = 0;
    for (std::size_t a = 0; a < r; ++a) {
        const std::complex<double> da = approx(md.qdims[a]);
        std::complex<double> term = std::pow(d_total / da, 2.0 * surface.genus - 2.0);
        for (std::size_t l : surface.punctures) term *= approx(md.s_tilde(a, l)) / da;
        acc += term;
    }
    StateSpaceResult res;
    res.modular = md.modular;
    const double rounded = std::round(acc.real());
    res.pre_rounding_residual = std::abs(acc - std::complex<double>(rounded, 0.0));
    if (res.pre_rounding_residual > 1e-6)
        throw ComputeError("integrality error: Verlinde-type sum " + std::to_string(acc.real()) + "+" +
                           std::to_string(acc.imag()) + "i is not within 1e-6 of an integer");
    res.dim = static_cast<long long>(rounded);
    return res;
}

/// Reshetikhin-Turaev-style invariant of surgery on a framed unlink:
///   Z = D^{-(n+1)} * prod_i (sum_a theta_a^{f_i} d_a^2) * (p+/D)^{-sigma}
/// with sigma the signature of the linking matrix. The empty link gives
/// Z(S^3) = 1/D; a single 0-framed unknot gives Z(S^2 x S^1) = 1.
inline TqftReport closed_invariant(const SurgerySpec& surgery, const SkeletalData& data) {
    if (surgery.framings.size() > 8)
        throw ComputeError("surgery component count exceeds the desk-scale cap of 8");
    const ModularData md = s_t_matrices(data);
    if (!md.modular) throw ComputeError("closed_invariant requires modular data (S~ invertible)");

    const std::size_t r = data.ring().rank();
    TqftReport rep;
    rep.d = std::sqrt(approx(md.global_dim_sq).real());
    rep.raw_product = 1.0;
    for (long long f : surgery.framings) {
        std::complex<double> comp = 0;
        for (std::size_t a = 0; a < r; ++a) {
            const std::complex<double> da = approx(md.qdims[a]);
            comp += std::pow(approx(data.twist(a)), static_cast<double>(f)) * da * da;
        }
        rep.raw_product *= comp;
        rep.signature += (f > 0) - (f < 0);
    }
    const std::complex<double> anomaly_base = approx(md.gauss_plus) / rep.d;
    rep.anomaly_factor = std::pow(anomaly_base, static_cast<double>(-rep.signature));
    rep.d_exponent = -static_cast<int>(surgery.framings.size()) - 1;
    rep.value = rep.raw_product * std::pow(rep.d, static_cast<double>(rep.d_exponent)) * rep.anomaly_factor;
    return rep;
}

/// Torus mapping-class relations on the unnormalized data:
///   (S~ T)^3 = p+ * S~^2   and   S~^2 = D^2 * C
/// with C the dual permutation. Singular S~ short-circuits to a non-modular
/// report.
inline ValidationReport torus_mcg_check(const SkeletalData& data, Tolerance tol = {}) {
    ValidationReport report;
    const ModularData md = s_t_matrices(data);
    const std::size_t r = data.ring().rank();

    if (!md.modular) {
        auto& check = report.add("modularity");
        check.pass = false;
        check.note = "S~ is singular: category is not modular; mapping-class relations skipped";
        return report;
    }
    auto& modular = report.add("modularity");
    ++modular.instances;

    const ComplexMatrix s = to_complex(md.s_tilde);
    const ComplexMatrix t = to_complex(md.t);
    ComplexMatrix st = s * t;
    const ComplexMatrix st3 = st * st * st;
    const ComplexMatrix s2 = s * s;

    ComplexMatrix lhs1 = st3;
    ComplexMatrix rhs1 = s2;
    const std::complex<double> pplus = approx(md.gauss_plus);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) rhs1(i, j) *= pplus;
    auto& rel1 = report.add("(S~T)^3 = p+ S~^2");
    ++rel1.instances;
    const double resid1 = max_abs(lhs1 - rhs1);
    if (resid1 > tol.eps * std::max(1.0, max_abs(rhs1))) {
        rel1.pass = false;
        rel1.failures.push_back({"matrix relation", "", "", resid1});
    }
    rel1.note = "residual " + std::to_string(resid1);

    ComplexMatrix dual_perm(r, r);
    for (std::size_t a = 0; a < r; ++a) dual_perm(a, data.ring().dual(a)) = 1.0;
    ComplexMatrix rhs2 = dual_perm;
    const std::complex<double> d2 = approx(md.global_dim_sq);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) rhs2(i, j) *= d2;
    auto& rel2 = report.add("S~^2 = D^2 C");
    ++rel2.instances;
    const double resid2 = max_abs(s2 - rhs2);
    if (resid2 > tol.eps * std::max(1.0, max_abs(rhs2))) {
        rel2.pass = false;
        rel2.failures.push_back({"matrix relation", "", "", resid2});
    }
    rel2.note = "residual " + std::to_string(resid2);
    return report;
}

}  // namespace ribcat
