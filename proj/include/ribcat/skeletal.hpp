#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ribcat/errors.hpp"
#include "ribcat/fusion_ring.hpp"
#include "ribcat/matrix.hpp"
#include "ribcat/report.hpp"
#include "ribcat/scalar.hpp"

namespace ribcat {

enum class ScalarMode { exact, approximate };

using FTable = std::map<std::array<std::size_t, 6>, Scalar>;
using RTable = std::map<std::array<std::size_t, 3>, Scalar>;

/// Coherence data of a skeletal fusion category over a multiplicity-free
/// ring: F-symbols, optional R-symbols, optional twists, pivotal
/// coefficients. Construction validates the index structure:
///   - every admissible tuple has an entry, and no inadmissible tuple does;
///   - unit-involving F entries (a, b or c = unit) are exactly 1;
///   - each F-block (fixed a,b,c,d) is invertible;
///   - theta_0 = 1, and exact twists are roots of unity;
///   - pivotal coefficients are nonzero, monoidal and have t_0 = 1.
/// Immutable after construction.
class SkeletalData {
public:
    SkeletalData(FusionRing ring, FTable f, RTable r, std::vector<Scalar> twist,
                 std::vector<Scalar> pivotal, ScalarMode mode)
        : ring_(std::move(ring)),
          f_(std::move(f)),
          r_(std::move(r)),
          twist_(std::move(twist)),
          pivotal_(std::move(pivotal)),
          mode_(mode) {
        if (!ring_.multiplicity_free())
            throw LoadError("skeletal layer requires a multiplicity-free fusion ring (all N <= 1)");
        validate_f_();
        validate_r_();
        validate_twist_();
        validate_pivotal_();
    }

    const FusionRing& ring() const { return ring_; }
    ScalarMode mode() const { return mode_; }
    bool braided() const { return !r_.empty(); }
    bool has_twist() const { return !twist_.empty(); }

    bool f_admissible(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e,
                      std::size_t f) const {
        return ring_.admissible(a, b, e) && ring_.admissible(e, c, d) && ring_.admissible(b, c, f) &&
               ring_.admissible(a, f, d);
    }

    /// F-symbol [F^{abc}_d]_{ef}; throws on a missing admissible entry.
    const Scalar& F(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e,
                    std::size_t f) const {
        const auto it = f_.find({a, b, c, d, e, f});
        if (it == f_.end())
            throw ComputeError("missing F entry at " + ring_.tuple_name({a, b, c, d, e, f}));
        return it->second;
    }

    /// F-symbol extended by zero to inadmissible tuples.
    Scalar F0(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e,
              std::size_t f) const {
        if (!f_admissible(a, b, c, d, e, f)) return Scalar::zero();
        return F(a, b, c, d, e, f);
    }

    /// R-symbol R^{ab}_c; throws when absent.
    const Scalar& R(std::size_t a, std::size_t b, std::size_t c) const {
        const auto it = r_.find({a, b, c});
        if (it == r_.end()) throw ComputeError("missing R entry at " + ring_.tuple_name({a, b, c}));
        return it->second;
    }
    Scalar R0(std::size_t a, std::size_t b, std::size_t c) const {
        if (!ring_.admissible(a, b, c)) return Scalar::zero();
        return R(a, b, c);
    }

    const Scalar& twist(std::size_t a) const {
        if (twist_.empty()) throw ComputeError("twist data not loaded");
        return twist_.at(a);
    }
    const Scalar& pivotal(std::size_t a) const { return pivotal_.at(a); }
    const std::vector<Scalar>& pivotal_vector() const { return pivotal_; }
    const std::vector<Scalar>& twist_vector() const { return twist_; }
    const FTable& f_table() const { return f_; }
    const RTable& r_table() const { return r_; }

    /// The F-matrix for fixed (a,b,c,d): rows indexed by admissible e, columns
    /// by admissible f. Index lists are returned alongside.
    struct FBlock {
        std::vector<std::size_t> e_labels;
        std::vector<std::size_t> f_labels;
        ScalarMatrix m;
    };
    FBlock f_block(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        FBlock blk;
        for (std::size_t e = 0; e < ring_.rank(); ++e)
            if (ring_.admissible(a, b, e) && ring_.admissible(e, c, d)) blk.e_labels.push_back(e);
        for (std::size_t f = 0; f < ring_.rank(); ++f)
            if (ring_.admissible(b, c, f) && ring_.admissible(a, f, d)) blk.f_labels.push_back(f);
        blk.m = ScalarMatrix(blk.e_labels.size(), blk.f_labels.size());
        for (std::size_t i = 0; i < blk.e_labels.size(); ++i)
            for (std::size_t j = 0; j < blk.f_labels.size(); ++j)
                blk.m(i, j) = F(a, b, c, d, blk.e_labels[i], blk.f_labels[j]);
        return blk;
    }

private:
    void validate_f_() {
        const std::size_t r = ring_.rank();
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = 0; c < r; ++c)
                    for (std::size_t d = 0; d < r; ++d)
                        for (std::size_t e = 0; e < r; ++e)
                            for (std::size_t f = 0; f < r; ++f) {
                                const bool adm = f_admissible(a, b, c, d, e, f);
                                const auto it = f_.find({a, b, c, d, e, f});
                                if (adm && it == f_.end())
                                    throw LoadError("missing F entry at admissible tuple " +
                                                    ring_.tuple_name({a, b, c, d, e, f}));
                                if (!adm && it != f_.end())
                                    throw LoadError("F entry present at inadmissible tuple " +
                                                    ring_.tuple_name({a, b, c, d, e, f}));
                                if (adm && (a == 0 || b == 0 || c == 0)) {
                                    if (!near_equal(it->second, Scalar::one()))
                                        throw LoadError("unit-involving F entry is not 1 at " +
                                                        ring_.tuple_name({a, b, c, d, e, f}) +
                                                        " (skeletal strictness)");
                                }
                            }
        // invertibility of every F-block
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = 0; c < r; ++c)
                    for (std::size_t d = 0; d < r; ++d) {
                        FBlock blk = f_block(a, b, c, d);
                        if (blk.e_labels.empty()) continue;
                        if (blk.e_labels.size() != blk.f_labels.size())
                            throw LoadError("non-square F-block at " + ring_.tuple_name({a, b, c, d}));
                        if (std::abs(determinant(to_complex(blk.m))) < 1e-12)
                            throw LoadError("singular F-block at " + ring_.tuple_name({a, b, c, d}));
                    }
    }

    void validate_r_() {
        if (r_.empty()) return;
        const std::size_t r = ring_.rank();
        for (const auto& [key, value] : r_) {
            if (!ring_.admissible(key[0], key[1], key[2]))
                throw LoadError("R entry present at inadmissible channel " +
                                ring_.tuple_name({key[0], key[1], key[2]}));
            if (value.is_zero())
                throw LoadError("R entry is zero at " + ring_.tuple_name({key[0], key[1], key[2]}));
        }
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = 0; c < r; ++c) {
                    if (!ring_.admissible(a, b, c)) continue;
                    if (r_.find({a, b, c}) == r_.end())
                        throw LoadError("missing R entry at admissible channel " + ring_.tuple_name({a, b, c}));
                    if ((a == 0 || b == 0) && !near_equal(R(a, b, c), Scalar::one()))
                        throw LoadError("unit braiding R entry is not 1 at " + ring_.tuple_name({a, b, c}));
                }
    }

    void validate_twist_() {
        if (twist_.empty()) return;
        if (twist_.size() != ring_.rank()) throw LoadError("twist vector length disagrees with rank");
        if (!near_equal(twist_[0], Scalar::one())) throw LoadError("twist of the unit must be 1");
        for (std::size_t a = 0; a < ring_.rank(); ++a) {
            if (mode_ == ScalarMode::exact && twist_[a].exact() && !twist_[a].is_root_of_unity())
                twist_warnings_.push_back("twist of " + ring_.label(a) + " is not a root of unity");
            if (!twist_[a].unit_modulus(1e-9))
                twist_warnings_.push_back("twist of " + ring_.label(a) + " does not have unit modulus");
        }
    }

    void validate_pivotal_() {
        if (pivotal_.empty()) {
            pivotal_.assign(ring_.rank(), Scalar::one());
            pivotal_defaulted_ = true;
        }
        if (pivotal_.size() != ring_.rank()) throw LoadError("pivotal vector length disagrees with rank");
        if (!near_equal(pivotal_[0], Scalar::one())) throw LoadError("pivotal coefficient of the unit must be 1");
        for (std::size_t a = 0; a < ring_.rank(); ++a)
            if (pivotal_[a].is_zero()) throw LoadError("pivotal coefficient of " + ring_.label(a) + " is zero");
        for (std::size_t a = 0; a < ring_.rank(); ++a)
            for (std::size_t b = 0; b < ring_.rank(); ++b)
                for (std::size_t c = 0; c < ring_.rank(); ++c)
                    if (ring_.admissible(a, b, c) &&
                        !near_equal(pivotal_[a] * pivotal_[b], pivotal_[c]))
                        throw LoadError("pivotal coefficients are not monoidal on channel " +
                                        ring_.tuple_name({a, b, c}));
    }

public:
    bool pivotal_defaulted() const { return pivotal_defaulted_; }
    const std::vector<std::string>& twist_warnings() const { return twist_warnings_; }

private:
    FusionRing ring_;
    FTable f_;
    RTable r_;
    std::vector<Scalar> twist_;
    std::vector<Scalar> pivotal_;
    ScalarMode mode_;
    bool pivotal_defaulted_ = false;
    std::vector<std::string> twist_warnings_;
};

namespace detail {

inline std::string side_value(const Scalar& s) { return s.str(); }

inline void record_instance(CheckResult& check, bool ok, const std::string& instance, const Scalar& lhs,
                            const Scalar& rhs) {
    ++check.instances;
    if (!ok) {
        check.pass = false;
        check.failures.push_back(
            {instance, side_value(lhs), side_value(rhs), std::abs(approx(lhs) - approx(rhs))});
    }
}

}  // namespace detail

/// Pentagon sweep:
///   [F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} =
///       sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}
/// over every pair of a left-nested tree (f,g) and a right-nested tree (l,k)
/// of the word (a,b,c,d) with total charge e.
inline ValidationReport check_pentagon(const SkeletalData& data, Tolerance tol = {}) {
    ValidationReport report;
    auto& check = report.add("pentagon");
    const FusionRing& ring = data.ring();
    const std::size_t r = ring.rank();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                for (std::size_t d = 0; d < r; ++d)
                    for (std::size_t e = 0; e < r; ++e)
                        for (std::size_t f = 0; f < r; ++f) {
                            if (!ring.admissible(a, b, f)) continue;
                            for (std::size_t g = 0; g < r; ++g) {
                                if (!(ring.admissible(f, c, g) && ring.admissible(g, d, e))) continue;
                                for (std::size_t l = 0; l < r; ++l) {
                                    if (!ring.admissible(c, d, l)) continue;
                                    for (std::size_t k = 0; k < r; ++k) {
                                        if (!(ring.admissible(b, l, k) && ring.admissible(a, k, e))) continue;
                                        Scalar lhs = data.F0(f, c, d, e, g, l) * data.F0(a, b, l, e, f, k);
                                        Scalar rhs = Scalar::zero();
                                        for (std::size_t h = 0; h < r; ++h)
                                            rhs = rhs + data.F0(a, b, c, g, f, h) * data.F0(a, h, d, e, g, k) *
                                                            data.F0(b, c, d, k, h, l);
                                        detail::record_instance(check, near_equal(lhs, rhs, tol),
                                                                ring.tuple_name({a, b, c, d, e, f, g, l, k}), lhs,
                                                                rhs);
                                    }
                                }
                            }
                        }
    return report;
}

/// Both hexagon families:
///   sum_{e'} [F^{abc}_d]_{ee'} R^{a e'}_d [F^{bca}_d]_{e'g}
///       = R^{ab}_e [F^{bac}_d]_{eg} R^{ac}_g
/// and the same with the inverse braiding R^{xy}_z -> (R^{yx}_z)^{-1}.
inline ValidationReport check_hexagon(const SkeletalData& data, Tolerance tol = {}) {
    ValidationReport report;
    if (!data.braided()) {
        auto& check = report.add("hexagon");
        check.pass = false;
        check.note = "missing R data: category is not braided";
        return report;
    }
    const FusionRing& ring = data.ring();
    const std::size_t r = ring.rank();
    for (int family = 0; family < 2; ++family) {
        auto& check = report.add(family == 0 ? "hexagon" : "hexagon-inverse");
        auto braid = [&](std::size_t x, std::size_t y, std::size_t z) -> Scalar {
            if (family == 0) return data.R0(x, y, z);
            const Scalar v = data.R0(y, x, z);
            return v.is_zero() ? v : v.inverse();
        };
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = 0; c < r; ++c)
                    for (std::size_t d = 0; d < r; ++d)
                        for (std::size_t e = 0; e < r; ++e) {
                            if (!(ring.admissible(a, b, e) && ring.admissible(e, c, d))) continue;
                            for (std::size_t g = 0; g < r; ++g) {
                                if (!(ring.admissible(a, c, g) && ring.admissible(b, g, d))) continue;
                                Scalar lhs = Scalar::zero();
                                for (std::size_t ep = 0; ep < r; ++ep) {
                                    if (!(ring.admissible(b, c, ep) && ring.admissible(a, ep, d))) continue;
                                    lhs = lhs + data.F0(a, b, c, d, e, ep) * braid(a, ep, d) *
                                                    data.F0(b, c, a, d, ep, g);
                                }
                                Scalar rhs = braid(a, b, e) * data.F0(b, a, c, d, e, g) * braid(a, c, g);
                                detail::record_instance(check, near_equal(lhs, rhs, tol),
                                                        ring.tuple_name({a, b, c, d, e, g}), lhs, rhs);
                            }
                        }
    }
    return report;
}

/// Ribbon sweep: theta_c = theta_a theta_b R^{ab}_c R^{ba}_c on every
/// admissible channel, plus theta_{dual(a)} = theta_a and theta_0 = 1.
inline ValidationReport check_ribbon(const SkeletalData& data, Tolerance tol = {}) {
    ValidationReport report;
    if (!data.braided() || !data.has_twist()) {
        auto& check = report.add("ribbon");
        check.pass = false;
        check.note = "ribbon check requires R data and twists";
        return report;
    }
    const FusionRing& ring = data.ring();
    const std::size_t r = ring.rank();

    auto& channel = report.add("ribbon-channel");
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) {
                if (!ring.admissible(a, b, c)) continue;
                const Scalar lhs = data.twist(c);
                const Scalar rhs = data.twist(a) * data.twist(b) * data.R(a, b, c) * data.R(b, a, c);
                detail::record_instance(channel, near_equal(lhs, rhs, tol), ring.tuple_name({a, b, c}), lhs,
                                        rhs);
            }

    auto& dual = report.add("ribbon-dual");
    for (std::size_t a = 0; a < r; ++a)
        detail::record_instance(dual, near_equal(data.twist(a), data.twist(ring.dual(a)), tol),
                                ring.tuple_name({a}), data.twist(a), data.twist(ring.dual(a)));
    return report;
}

/// Gauge factors g(a,b,c) on fusion vertices; unit channels must be 1.
using GaugeMap = std::map<std::array<std::size_t, 3>, Scalar>;

/// Rescales the fusion-tree basis:
///   F' = F * g(a,b,e) g(e,c,d) / (g(b,c,f) g(a,f,d)),
///   R' = R * g(b,a,c) / g(a,b,c),
///   t' = t * g(a,a*,0) / g(a*,a,0).
/// Twists are untouched. Verifier verdicts are preserved.
inline SkeletalData gauge_transform(const SkeletalData& data, const GaugeMap& gauge) {
    const FusionRing& ring = data.ring();
    auto factor = [&](std::size_t a, std::size_t b, std::size_t c) -> Scalar {
        const auto it = gauge.find({a, b, c});
        if (it == gauge.end()) return Scalar::one();
        if (it->second.is_zero()) throw LoadError("zero gauge factor at " + ring.tuple_name({a, b, c}));
        if ((a == 0 || b == 0) && !near_equal(it->second, Scalar::one()))
            throw LoadError("gauge factor on a unit channel must be 1 at " + ring.tuple_name({a, b, c}));
        return it->second;
    };

    FTable f;
    for (const auto& [key, value] : data.f_table()) {
        const auto& [a, b, c, d, e, ff] = key;
        f[key] = value * factor(a, b, e) * factor(e, c, d) * (factor(b, c, ff) * factor(a, ff, d)).inverse();
    }
    RTable rt;
    for (const auto& [key, value] : data.r_table())
        rt[key] = value * factor(key[1], key[0], key[2]) * factor(key[0], key[1], key[2]).inverse();

    std::vector<Scalar> pivotal;
    for (std::size_t a = 0; a < ring.rank(); ++a)
        pivotal.push_back(data.pivotal(a) * factor(a, ring.dual(a), 0) *
                          factor(ring.dual(a), a, 0).inverse());

    return SkeletalData(ring, std::move(f), std::move(rt), data.twist_vector(), std::move(pivotal),
                        data.mode());
}

/// Convert every scalar to its complex-double evaluation.
inline SkeletalData to_approximate(const SkeletalData& data) {
    FTable f;
    for (const auto& [key, value] : data.f_table()) f[key] = Scalar::approximate(approx(value));
    RTable r;
    for (const auto& [key, value] : data.r_table()) r[key] = Scalar::approximate(approx(value));
    std::vector<Scalar> twist, pivotal;
    for (const auto& s : data.twist_vector()) twist.push_back(Scalar::approximate(approx(s)));
    for (std::size_t a = 0; a < data.ring().rank(); ++a)
        pivotal.push_back(Scalar::approximate(approx(data.pivotal(a))));
    return SkeletalData(data.ring(), std::move(f), std::move(r), std::move(twist), std::move(pivotal),
                        ScalarMode::approximate);
}

}  // namespace ribcat
