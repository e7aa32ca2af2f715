#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ribcat/errors.hpp"
#include "ribcat/report.hpp"

namespace ribcat {

/// Grothendieck-level data of a fusion category: simple-object labels, the
/// fusion tensor N[a][b][c], and the duality involution. The unit is always
/// index 0 (inputs using another position are re-indexed on load).
class FusionRing {
public:
    FusionRing(std::vector<std::string> labels, std::vector<std::size_t> dual,
               std::vector<std::vector<std::vector<unsigned>>> fusion)
        : labels_(std::move(labels)), dual_(std::move(dual)), n_(std::move(fusion)) {
        const std::size_t r = labels_.size();
        if (r == 0) throw LoadError("fusion ring must have at least the unit object");
        if (dual_.size() != r) throw LoadError("dual involution length disagrees with rank");
        if (n_.size() != r) throw LoadError("fusion tensor shape disagrees with rank");
        for (const auto& plane : n_) {
            if (plane.size() != r) throw LoadError("fusion tensor shape disagrees with rank");
            for (const auto& row : plane)
                if (row.size() != r) throw LoadError("fusion tensor shape disagrees with rank");
        }
        for (std::size_t a = 0; a < r; ++a)
            if (dual_[a] >= r) throw LoadError("dual involution maps outside label range");
    }

    std::size_t rank() const { return labels_.size(); }
    const std::string& label(std::size_t a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t dual(std::size_t a) const { return dual_.at(a); }
    const std::vector<std::size_t>& duals() const { return dual_; }
    unsigned fusion(std::size_t a, std::size_t b, std::size_t c) const { return n_[a][b][c]; }

    std::size_t label_index(const std::string& name) const {
        for (std::size_t a = 0; a < labels_.size(); ++a)
            if (labels_[a] == name) return a;
        throw LoadError("unknown label: " + name);
    }

    /// Multiplicity-free admissibility (N == 1).
    bool admissible(std::size_t a, std::size_t b, std::size_t c) const { return n_[a][b][c] == 1; }

    std::vector<std::size_t> channels(std::size_t a, std::size_t b) const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < rank(); ++c)
            if (n_[a][b][c] > 0) out.push_back(c);
        return out;
    }

    bool multiplicity_free() const {
        for (const auto& plane : n_)
            for (const auto& row : plane)
                for (unsigned v : row)
                    if (v > 1) return false;
        return true;
    }

    std::string tuple_name(std::initializer_list<std::size_t> idx) const {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (std::size_t a : idx) {
            if (!first) os << ",";
            first = false;
            os << label(a);
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> dual_;
    std::vector<std::vector<std::vector<unsigned>>> n_;
};

/// Checks unit laws, duality involution, ring-level rigidity and
/// associativity. Each failing instance is reported with its index tuple.
inline ValidationReport validate_ring(const FusionRing& ring) {
    ValidationReport report;
    const std::size_t r = ring.rank();

    auto& unit = report.add("unit-law");
    for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c) {
            ++unit.instances;
            const bool left_ok = ring.fusion(0, b, c) == (b == c ? 1u : 0u);
            const bool right_ok = ring.fusion(b, 0, c) == (b == c ? 1u : 0u);
            if (!left_ok || !right_ok) {
                unit.pass = false;
                unit.failures.push_back({ring.tuple_name({0, b, c}), "unit fusion", "delta", 1.0});
            }
        }

    auto& dual = report.add("dual-involution");
    for (std::size_t a = 0; a < r; ++a) {
        ++dual.instances;
        if (ring.dual(ring.dual(a)) != a || ring.dual(0) != 0) {
            dual.pass = false;
            dual.failures.push_back({ring.tuple_name({a}), "dual(dual(a))", ring.label(a), 1.0});
        }
    }

    auto& rigid = report.add("ring-rigidity");
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            ++rigid.instances;
            const unsigned expected = (b == ring.dual(a)) ? 1u : 0u;
            if (ring.fusion(a, b, 0) != expected) {
                rigid.pass = false;
                rigid.failures.push_back({ring.tuple_name({a, b, 0}), std::to_string(ring.fusion(a, b, 0)),
                                          std::to_string(expected), 1.0});
            }
        }

    auto& assoc = report.add("ring-associativity");
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                for (std::size_t d = 0; d < r; ++d) {
                    ++assoc.instances;
                    unsigned long long lhs = 0, rhs = 0;
                    for (std::size_t e = 0; e < r; ++e) lhs += static_cast<unsigned long long>(ring.fusion(a, b, e)) * ring.fusion(e, c, d);
                    for (std::size_t f = 0; f < r; ++f) rhs += static_cast<unsigned long long>(ring.fusion(b, c, f)) * ring.fusion(a, f, d);
                    if (lhs != rhs) {
                        assoc.pass = false;
                        assoc.failures.push_back({ring.tuple_name({a, b, c, d}), std::to_string(lhs),
                                                  std::to_string(rhs), static_cast<double>(lhs > rhs ? lhs - rhs : rhs - lhs)});
                    }
                }

    return report;
}

/// Frobenius-Perron dimensions: d_a is the Perron root of the fusion matrix
/// (N_a)_{bc}, computed by power iteration on N_a + I. The defining equation
/// d_a d_b = sum_c N[a][b][c] d_c is re-checked to 1e-9 at the end.
inline std::vector<double> fp_dimensions(const FusionRing& ring) {
    const std::size_t r = ring.rank();
    std::vector<double> dims(r, 1.0);
    for (std::size_t a = 0; a < r; ++a) {
        std::vector<double> v(r, 1.0), w(r);
        double lambda = 0.0;
        bool converged = false;
        for (int step = 0; step < 100000; ++step) {
            for (std::size_t b = 0; b < r; ++b) {
                double acc = v[b];  // shift by identity keeps the iteration aperiodic
                for (std::size_t c = 0; c < r; ++c) acc += ring.fusion(a, b, c) * v[c];
                w[b] = acc;
            }
            double norm = 0.0;
            for (double x : w) norm += x * x;
            norm = std::sqrt(norm);
            if (norm == 0.0) throw ComputeError("fp_dimensions: zero iterate");
            for (auto& x : w) x /= norm;
            lambda = norm;
            double resid = 0.0;
            for (std::size_t b = 0; b < r; ++b) {
                double acc = w[b];
                for (std::size_t c = 0; c < r; ++c) acc += ring.fusion(a, b, c) * w[c];
                resid = std::max(resid, std::abs(acc - lambda * w[b]));
            }
            v = w;
            if (resid <= 1e-12 * std::max(1.0, lambda)) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw ComputeError("fp_dimensions: power iteration failed to reach residual 1e-12 in 1e5 steps (label " +
                               ring.label(a) + ")");
        dims[a] = lambda - 1.0;
    }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            double acc = 0.0;
            for (std::size_t c = 0; c < r; ++c) acc += ring.fusion(a, b, c) * dims[c];
            if (std::abs(dims[a] * dims[b] - acc) > 1e-9)
                throw ComputeError("fp_dimensions: character equation residual above 1e-9 at " +
                                   ring.tuple_name({a, b}));
        }
    return dims;
}

/// Re-index the ring by a permutation (perm[old] = new position).
inline FusionRing relabeled(const FusionRing& ring, const std::vector<std::size_t>& perm) {
    const std::size_t r = ring.rank();
    if (perm.size() != r) throw LoadError("relabeled: permutation length disagrees with rank");
    std::vector<std::string> labels(r);
    std::vector<std::size_t> dual(r);
    std::vector<std::vector<std::vector<unsigned>>> fusion(
        r, std::vector<std::vector<unsigned>>(r, std::vector<unsigned>(r, 0)));
    for (std::size_t a = 0; a < r; ++a) {
        labels[perm[a]] = ring.label(a);
        dual[perm[a]] = perm[ring.dual(a)];
    }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                fusion[perm[a]][perm[b]][perm[c]] = ring.fusion(a, b, c);
    return FusionRing(std::move(labels), std::move(dual), std::move(fusion));
}

}  // namespace ribcat
