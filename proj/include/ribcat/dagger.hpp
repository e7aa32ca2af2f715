#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ribcat/errors.hpp"
#include "ribcat/matrix.hpp"
#include "ribcat/modular.hpp"
#include "ribcat/poly.hpp"
#include "ribcat/report.hpp"
#include "ribcat/skeletal.hpp"
#include "ribcat/treecalc.hpp"

namespace ribcat {

/// A dagger structure on skeletal data: the dagger acts as conjugate-transpose
/// in the fusion-tree basis, twisted per fusion vertex by basis_phases. The
/// canonical dagger has all phases 1.
class DaggerStructure {
public:
    DaggerStructure() = default;
    explicit DaggerStructure(std::map<std::array<std::size_t, 3>, Scalar> phases)
        : phases_(std::move(phases)) {
        for (const auto& [key, value] : phases_) {
            if (!value.unit_modulus(1e-9))
                throw LoadError("dagger basis phase does not satisfy phase*conj(phase) = 1 at (" +
                                std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                                std::to_string(key[2]) + ")");
        }
    }

    Scalar phase(std::size_t a, std::size_t b, std::size_t c) const {
        const auto it = phases_.find({a, b, c});
        return it == phases_.end() ? Scalar::one() : it->second;
    }
    const std::map<std::array<std::size_t, 3>, Scalar>& phases() const { return phases_; }
    bool conjugates_scalars() const { return true; }

private:
    std::map<std::array<std::size_t, 3>, Scalar> phases_;
};

/// Product of basis phases over the fusion vertices of a tree.
inline Scalar tree_phase(const FusionTree& t, const DaggerStructure& dag) {
    Scalar acc = Scalar::one();
    for (std::size_t j = 0; j + 1 < t.leaves.size(); ++j)
        acc = acc * dag.phase(t.charge_after(j), t.leaves[j + 1], t.charge_after(j + 1));
    return acc;
}

/// The adjoint in the fusion-tree basis:
///   (f^dag)_{S,T} = conj(f_{T,S}) * Phi_S * Phi_T.
inline MorphismMatrix dagger_of(const MorphismMatrix& f, const DaggerStructure& dag) {
    MorphismMatrix r;
    r.source = f.target;
    r.target = f.source;
    r.mat = ScalarMatrix(f.source.size(), f.target.size());
    for (std::size_t s = 0; s < f.source.size(); ++s) {
        const Scalar phi_s = tree_phase(f.source[s], dag);
        for (std::size_t t = 0; t < f.target.size(); ++t)
            r.mat(s, t) = conjugate(f.mat(t, s)) * phi_s * tree_phase(f.target[t], dag);
    }
    return r;
}

namespace detail {

inline void record_matrix_check(CheckResult& check, const std::string& name, const MorphismMatrix& lhs,
                                const MorphismMatrix& rhs, Tolerance tol) {
    ++check.instances;
    const bool typed = (lhs.source == rhs.source) && (lhs.target == rhs.target);
    const double resid = typed ? max_abs_diff(lhs.mat, rhs.mat) : 1.0;
    if (!typed || resid > tol.eps) {
        check.pass = false;
        check.failures.push_back({name, typed ? "matrix" : "ill-typed", "mismatch", resid});
    }
}

/// Channel-diagonal eigenvalues of a two-leaf endomorphism, indexed by root.
inline std::map<std::size_t, Scalar> channel_eigenvalues(const MorphismMatrix& f) {
    std::map<std::size_t, Scalar> out;
    for (std::size_t i = 0; i < f.source.size(); ++i) out[f.source[i].root] = f.mat(i, i);
    return out;
}

/// Generating morphism set for the dagger axiom sweeps: monodromies, channel
/// projections, braid generators, cups and caps.
struct NamedMorphism {
    std::string name;
    MorphismMatrix m;
};

inline std::vector<NamedMorphism> generator_set(const SkeletalData& data) {
    std::vector<NamedMorphism> out;
    const FusionRing& ring = data.ring();
    const std::size_t r = ring.rank();
    for (std::size_t a = 0; a < r; ++a) {
        out.push_back({"coev(" + ring.label(a) + ")", coevaluation(a, data)});
        out.push_back({"ev(" + ring.label(a) + ")", evaluation(a, data)});
        out.push_back({"coev'(" + ring.label(a) + ")", coevaluation_right(a, data)});
        out.push_back({"ev'(" + ring.label(a) + ")", evaluation_right(a, data)});
    }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            const auto channels = ring.channels(a, b);
            if (channels.empty()) continue;
            // projection onto the first fusion channel
            MorphismMatrix proj = identity_on({a, b}, data);
            for (std::size_t i = 0; i < proj.source.size(); ++i)
                proj.mat(i, i) = proj.source[i].root == channels.front() ? Scalar::one() : Scalar::zero();
            out.push_back({"proj(" + ring.label(a) + "," + ring.label(b) + "->" +
                               ring.label(channels.front()) + ")",
                           std::move(proj)});
            if (data.braided())
                out.push_back({"monodromy(" + ring.label(a) + "," + ring.label(b) + ")",
                               monodromy(a, b, data)});
        }
    if (data.braided())
        for (std::size_t x = 1; x < r; ++x)
            for (std::size_t root = 0; root < r; ++root) {
                if (hom_dim({x, x, x}, root, ring) == 0) continue;
                auto gens = braid_rep(3, x, root, data);
                for (std::size_t i = 0; i < gens.size(); ++i)
                    out.push_back({"braid3(" + ring.label(x) + "->" + ring.label(root) + ",sigma" +
                                       std::to_string(i + 1) + ")",
                                   gens[i]});
            }
    return out;
}

}  // namespace detail

/// Verifies on the generating morphism set: id^dag = id, (f^dag)^dag = f,
/// (g o f)^dag = f^dag o g^dag, and (f (x) g)^dag = f^dag (x) g^dag, with the
/// dagger realized as phase-twisted conjugate-transpose.
inline ValidationReport check_dagger_axioms(const SkeletalData& data, const DaggerStructure& dag,
                                            Tolerance tol = {}) {
    ValidationReport report;
    const FusionRing& ring = data.ring();
    const auto gens = detail::generator_set(data);

    auto& ident = report.add("dagger-identity");
    for (std::size_t a = 0; a < ring.rank(); ++a)
        for (std::size_t b = 0; b < ring.rank(); ++b) {
            MorphismMatrix id = identity_on({a, b}, data);
            detail::record_matrix_check(ident, "id(" + ring.label(a) + "," + ring.label(b) + ")",
                                        dagger_of(id, dag), id, tol);
        }

    auto& invol = report.add("dagger-involution");
    for (const auto& g : gens)
        detail::record_matrix_check(invol, g.name, dagger_of(dagger_of(g.m, dag), dag), g.m, tol);

    auto& contra = report.add("dagger-contravariance");
    for (const auto& f : gens)
        for (const auto& g : gens) {
            if (!(f.m.target == g.m.source)) continue;
            const MorphismMatrix lhs = dagger_of(compose(g.m, f.m), dag);
            const MorphismMatrix rhs = compose(dagger_of(f.m, dag), dagger_of(g.m, dag));
            detail::record_matrix_check(contra, g.name + " o " + f.name, lhs, rhs, tol);
        }

    if (data.braided()) {
        auto& tensor = report.add("dagger-monoidality");
        for (std::size_t a = 0; a < ring.rank(); ++a)
            for (std::size_t b = 0; b < ring.rank(); ++b) {
                const std::vector<std::size_t> word{a, b, a, b};
                const MorphismMatrix f = monodromy(a, b, data);
                const auto lam = detail::channel_eigenvalues(f);
                const auto lam_dag = detail::channel_eigenvalues(dagger_of(f, dag));
                auto eig = [&](const std::map<std::size_t, Scalar>& m) {
                    return [&m](std::size_t e) {
                        const auto it = m.find(e);
                        return it == m.end() ? Scalar::zero() : it->second;
                    };
                };
                const MorphismMatrix fg =
                    compose(local_channel_op(word, 0, eig(lam), data), local_channel_op(word, 2, eig(lam), data));
                const MorphismMatrix fg_dag_parts = compose(local_channel_op(word, 0, eig(lam_dag), data),
                                                            local_channel_op(word, 2, eig(lam_dag), data));
                detail::record_matrix_check(tensor,
                                            "monodromy (x) monodromy on " + ring.tuple_name({a, b, a, b}),
                                            dagger_of(fg, dag), fg_dag_parts, tol);
            }
    }
    return report;
}

/// Thm-style transported dagger on End(x (x) y):
///   f' = c_{y,x}^{-1} o f^dag o c_{y,x},  an endomorphism of y (x) x.
/// Applying the operation twice returns f.
inline MorphismMatrix transported_dagger(const MorphismMatrix& f, const SkeletalData& data,
                                         const DaggerStructure& dag) {
    if (!f.endomorphism() || f.source.empty() || f.source[0].leaves.size() != 2)
        throw ComputeError("transported dagger requires an endomorphism of a two-factor tensor product");
    const std::size_t x = f.source[0].leaves[0];
    const std::size_t y = f.source[0].leaves[1];
    const MorphismMatrix c = braiding_morphism(y, x, data);  // y (x) x -> x (x) y
    MorphismMatrix c_inv{c.target, c.source, c.mat.inverse()};
    return compose(c_inv, compose(dagger_of(f, dag), c));
}

/// Positivity classification: hermitian iff every quantum dimension is real
/// and strictly positive and every braid generator is unitary under the
/// dagger. The literal predicate (f^dag f = 0 => f = 0) is evaluated on the
/// generating set and reported separately; it does not decide the verdict.
struct PositivityReport {
    bool hermitian = false;
    std::string evidence;
    std::vector<Scalar> dims;
    bool dims_positive = false;
    bool generators_unitary = false;
    double worst_unitarity = 0.0;
    std::string worst_unitarity_name;
    bool literal_predicate_holds = true;
    std::string literal_note;
};

inline PositivityReport classify_positivity(const SkeletalData& data, const DaggerStructure& dag,
                                            Tolerance tol = {}) {
    PositivityReport rep;
    rep.dims = quantum_dimensions(data);
    rep.dims_positive = true;
    for (std::size_t a = 0; a < rep.dims.size(); ++a) {
        const auto z = approx(rep.dims[a]);
        if (std::abs(z.imag()) > tol.eps || z.real() <= tol.eps) {
            rep.dims_positive = false;
            rep.evidence = "d(" + data.ring().label(a) + ") = " + rep.dims[a].str() +
                           " is not real and strictly positive";
            break;
        }
    }

    rep.generators_unitary = true;
    if (data.braided()) {
        const FusionRing& ring = data.ring();
        std::vector<detail::NamedMorphism> braids;
        for (std::size_t a = 1; a < ring.rank(); ++a)
            for (std::size_t b = 1; b < ring.rank(); ++b)
                braids.push_back({"c(" + ring.label(a) + "," + ring.label(b) + ")",
                                  braiding_morphism(a, b, data)});
        for (std::size_t x = 1; x < ring.rank(); ++x)
            for (std::size_t root = 0; root < ring.rank(); ++root) {
                if (hom_dim({x, x, x}, root, ring) == 0) continue;
                auto gens = braid_rep(3, x, root, data);
                for (std::size_t i = 0; i < gens.size(); ++i)
                    braids.push_back({"braid3(" + ring.label(x) + "->" + ring.label(root) + ",sigma" +
                                          std::to_string(i + 1) + ")",
                                      gens[i]});
            }
        for (const auto& g : braids) {
            const MorphismMatrix gg = compose(g.m, dagger_of(g.m, dag));
            ComplexMatrix dev = to_complex(gg.mat) - ComplexMatrix::identity(gg.mat.rows());
            const double nrm = operator_norm(dev);
            if (nrm > rep.worst_unitarity) {
                rep.worst_unitarity = nrm;
                rep.worst_unitarity_name = g.name;
            }
        }
        if (rep.worst_unitarity > tol.eps) {
            rep.generators_unitary = false;
            if (rep.evidence.empty())
                rep.evidence = "generator " + rep.worst_unitarity_name + " violates unitarity by " +
                               std::to_string(rep.worst_unitarity) + " in operator norm";
        }
    }

    // literal positivity predicate on the generating set
    for (const auto& g : detail::generator_set(data)) {
        const MorphismMatrix gg = compose(dagger_of(g.m, dag), g.m);
        const double norm_ggdag = max_abs(to_complex(gg.mat));
        const double norm_g = max_abs(to_complex(g.m.mat));
        if (norm_ggdag <= tol.eps && norm_g > tol.eps) {
            rep.literal_predicate_holds = false;
            rep.literal_note = "f^dag f = 0 with f != 0 at " + g.name;
            break;
        }
    }
    if (rep.literal_predicate_holds && rep.literal_note.empty())
        rep.literal_note = "no violation of f^dag f = 0 => f = 0 on the generating set";

    rep.hermitian = rep.dims_positive && rep.generators_unitary;
    if (rep.hermitian) rep.evidence = "all quantum dimensions positive; all braid generators unitary";
    return rep;
}

// ---------------------------------------------------------------------------
// Hexagon solver: find all braidings compatible with given F-data (rank <= 3
// search, or verify a supplied candidate list), then filter by dagger
// compatibility g^dag = g^{-1} of every braid generator.
// ---------------------------------------------------------------------------

struct BraidingSolution {
    RTable r;
    bool dagger_compatible = false;
    double residual = 0.0;
};

struct BraidingSearchResult {
    std::vector<BraidingSolution> solutions;
    int compatible_count = 0;
    std::size_t hexagon_count() const { return solutions.size(); }
};

namespace detail {

struct HexSystem {
    std::vector<std::array<std::size_t, 3>> vars;  // admissible channels with a,b != 0
    std::map<std::array<std::size_t, 3>, std::size_t> index;
    std::vector<MPoly> equations;

    MPoly rvar(std::size_t a, std::size_t b, std::size_t c) const {
        if (a == 0 || b == 0) return MPoly::constant(vars.size(), 1.0);
        return MPoly::variable(vars.size(), index.at({a, b, c}));
    }
};

inline HexSystem build_hexagon_system(const SkeletalData& data) {
    const FusionRing& ring = data.ring();
    const std::size_t r = ring.rank();
    HexSystem sys;
    for (std::size_t a = 1; a < r; ++a)
        for (std::size_t b = 1; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                if (ring.admissible(a, b, c)) {
                    sys.index[{a, b, c}] = sys.vars.size();
                    sys.vars.push_back({a, b, c});
                }
    const std::size_t nv = sys.vars.size();
    auto fc = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e,
                  std::size_t f) { return approx(data.F0(a, b, c, d, e, f)); };

    for (std::size_t a = 1; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                for (std::size_t d = 0; d < r; ++d)
                    for (std::size_t e = 0; e < r; ++e) {
                        if (!(ring.admissible(a, b, e) && ring.admissible(e, c, d))) continue;
                        for (std::size_t g = 0; g < r; ++g) {
                            if (!(ring.admissible(a, c, g) && ring.admissible(b, g, d))) continue;
                            // family 1
                            MPoly lhs(nv), rhs(nv);
                            for (std::size_t ep = 0; ep < r; ++ep) {
                                if (!(ring.admissible(b, c, ep) && ring.admissible(a, ep, d))) continue;
                                lhs = lhs + MPoly::constant(nv, fc(a, b, c, d, e, ep) * fc(b, c, a, d, ep, g)) *
                                                sys.rvar(a, ep, d);
                            }
                            rhs = MPoly::constant(nv, fc(b, a, c, d, e, g)) * sys.rvar(a, b, e) *
                                  sys.rvar(a, c, g);
                            MPoly eq = lhs - rhs;
                            if (!eq.is_zero(1e-13)) sys.equations.push_back(eq);

                            // family 2, multiplied through by all inverted variables
                            std::vector<std::size_t> inv_slots;  // channels e' with a nonunit variable
                            for (std::size_t ep = 0; ep < r; ++ep)
                                if (ring.admissible(b, c, ep) && ring.admissible(a, ep, d) && ep != 0)
                                    inv_slots.push_back(ep);
                            MPoly prod_all = MPoly::constant(nv, 1.0);
                            for (std::size_t ep : inv_slots) prod_all = prod_all * sys.rvar(ep, a, d);
                            MPoly lhs2(nv);
                            for (std::size_t ep = 0; ep < r; ++ep) {
                                if (!(ring.admissible(b, c, ep) && ring.admissible(a, ep, d))) continue;
                                MPoly term =
                                    MPoly::constant(nv, fc(a, b, c, d, e, ep) * fc(b, c, a, d, ep, g));
                                // the unit channel carries no inverse, so it keeps the full product
                                for (std::size_t eq2 : inv_slots)
                                    if (eq2 != ep) term = term * sys.rvar(eq2, a, d);
                                lhs2 = lhs2 + term * sys.rvar(b, a, e) * sys.rvar(c, a, g);
                            }
                            MPoly rhs2 = MPoly::constant(nv, fc(b, a, c, d, e, g)) * prod_all;
                            MPoly eq2 = lhs2 - rhs2;
                            if (!eq2.is_zero(1e-13)) sys.equations.push_back(eq2);
                        }
                    }
    return sys;
}

// Branching elimination over the polynomial system: repeatedly pick an
// equation involving a single unknown, branch over its roots, substitute.
// Zero roots are discarded (R-symbols are invertible). Collects full numeric
// assignments.
inline void solve_branch(const std::vector<MPoly>& eqs, std::vector<std::optional<Cplx>> assign,
                         std::vector<std::vector<Cplx>>& out, int depth) {
    if (depth > 64) throw ComputeError("hexagon search: branching depth exceeded");

    std::vector<MPoly> live;
    for (const auto& p : eqs) {
        if (p.is_zero(1e-10)) continue;
        if (p.is_constant(1e-10)) return;  // nonzero constant: dead branch
        live.push_back(p);
    }

    if (live.empty()) {
        for (const auto& v : assign)
            if (!v)
                throw ComputeError(
                    "hexagon search: underdetermined system (an R-symbol is unconstrained)");
        std::vector<Cplx> x(assign.size());
        for (std::size_t i = 0; i < assign.size(); ++i) x[i] = *assign[i];
        out.push_back(std::move(x));
        return;
    }

    for (const auto& p : live) {
        const auto var = p.sole_variable();
        if (!var) continue;
        const auto roots = polynomial_roots(p.univariate_coeffs(*var));
        if (roots.empty()) return;  // no roots: dead branch
        for (const Cplx& root : roots) {
            if (std::abs(root) < 1e-9) continue;
            auto next_assign = assign;
            next_assign[*var] = root;
            std::vector<MPoly> next;
            next.reserve(live.size());
            for (const auto& q : live) next.push_back(q.substitute(*var, root));
            solve_branch(next, std::move(next_assign), out, depth + 1);
        }
        return;
    }

    throw ComputeError(
        "hexagon search: system not reducible by univariate elimination; supply candidates instead");
}

}  // namespace detail

/// Solve both hexagon families for unknown R-values over the given F-data
/// (rank <= 3), filter by dagger compatibility, and report solutions up to
/// gauge equivalence. A count of zero is a valid result.
inline BraidingSearchResult count_dagger_compatible_braidings(const SkeletalData& data,
                                                              const DaggerStructure& dag,
                                                              Tolerance tol = {}) {
    if (data.ring().rank() > 3)
        throw ComputeError("braiding search unsupported for rank > 3; supply an R-candidate list");
    auto sys = detail::build_hexagon_system(data);

    std::vector<std::vector<Cplx>> raw;
    if (sys.vars.empty()) {
        raw.push_back({});
    } else {
        std::vector<std::optional<Cplx>> assign(sys.vars.size());
        detail::solve_branch(sys.equations, std::move(assign), raw, 0);
    }

    // polish on the original system, drop duplicates and gauge-equivalent copies
    std::vector<std::vector<Cplx>> polished;
    std::vector<std::vector<Cplx>> fingerprints;
    std::vector<double> residuals;
    for (auto& x : raw) {
        double resid = sys.vars.empty() ? 0.0 : polish_system(sys.equations, x);
        if (resid > 1e-12) continue;
        bool nonzero = true;
        for (const auto& v : x)
            if (std::abs(v) < 1e-9) nonzero = false;
        if (!nonzero) continue;
        // gauge-invariant fingerprint: monodromy per channel plus R^{aa}_c
        std::vector<Cplx> fp;
        for (std::size_t i = 0; i < sys.vars.size(); ++i) {
            const auto [a, b, c] = sys.vars[i];
            fp.push_back(x[i] * x[sys.index.at({b, a, c})]);
            if (a == b) fp.push_back(x[i]);
        }
        bool dup = false;
        for (const auto& known : fingerprints) {
            double dist = 0;
            for (std::size_t i = 0; i < fp.size(); ++i) dist = std::max(dist, std::abs(fp[i] - known[i]));
            if (dist < 1e-7) dup = true;
        }
        if (dup) continue;
        fingerprints.push_back(std::move(fp));
        polished.push_back(std::move(x));
        residuals.push_back(resid);
    }

    // deterministic order: lexicographic by (Re, Im) across the variable list
    std::vector<std::size_t> order(polished.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < sys.vars.size(); ++k) {
            const Cplx a = polished[i][k], b = polished[j][k];
            if (std::abs(a.real() - b.real()) > 1e-10) return a.real() < b.real();
            if (std::abs(a.imag() - b.imag()) > 1e-10) return a.imag() < b.imag();
        }
        return false;
    });

    BraidingSearchResult result;
    for (std::size_t oi : order) {
        const auto& x = polished[oi];
        RTable rt;
        const FusionRing& ring = data.ring();
        for (std::size_t a = 0; a < ring.rank(); ++a)
            for (std::size_t b = 0; b < ring.rank(); ++b)
                for (std::size_t c = 0; c < ring.rank(); ++c) {
                    if (!ring.admissible(a, b, c)) continue;
                    if (a == 0 || b == 0)
                        rt[{a, b, c}] = Scalar::one();
                    else
                        rt[{a, b, c}] = Scalar::approximate(x[sys.index.at({a, b, c})]);
                }
        BraidingSolution sol;
        sol.r = std::move(rt);
        sol.residual = residuals[oi];

        SkeletalData candidate(data.ring(), data.f_table(), sol.r, {}, data.pivotal_vector(),
                               ScalarMode::approximate);
        sol.dagger_compatible = true;
        const double gate = std::max(tol.eps, 1e-7);
        for (std::size_t a = 1; a < ring.rank() && sol.dagger_compatible; ++a)
            for (std::size_t b = 1; b < ring.rank() && sol.dagger_compatible; ++b) {
                const MorphismMatrix c = braiding_morphism(a, b, candidate);
                const MorphismMatrix gg = compose(c, dagger_of(c, dag));
                if (operator_norm(to_complex(gg.mat) - ComplexMatrix::identity(gg.mat.rows())) > gate)
                    sol.dagger_compatible = false;
            }
        for (std::size_t x3 = 1; x3 < ring.rank() && sol.dagger_compatible; ++x3)
            for (std::size_t root = 0; root < ring.rank() && sol.dagger_compatible; ++root) {
                if (hom_dim({x3, x3, x3}, root, ring) == 0) continue;
                for (const auto& g : braid_rep(3, x3, root, candidate)) {
                    const MorphismMatrix gg = compose(g, dagger_of(g, dag));
                    if (operator_norm(to_complex(gg.mat) - ComplexMatrix::identity(gg.mat.rows())) > gate) {
                        sol.dagger_compatible = false;
                        break;
                    }
                }
            }
        if (sol.dagger_compatible) ++result.compatible_count;
        result.solutions.push_back(std::move(sol));
    }
    return result;
}

/// Verify mode: check supplied R-candidates against both hexagon families and
/// the dagger-compatibility condition. Works at any rank.
inline BraidingSearchResult count_dagger_compatible_braidings(const SkeletalData& data,
                                                              const DaggerStructure& dag, Tolerance tol,
                                                              const std::vector<RTable>& candidates) {
    BraidingSearchResult result;
    for (const auto& rt : candidates) {
        SkeletalData candidate(data.ring(), data.f_table(), rt, {}, data.pivotal_vector(), data.mode());
        if (!check_hexagon(candidate, tol).passed()) continue;
        BraidingSolution sol;
        sol.r = rt;
        sol.dagger_compatible = classify_positivity(candidate, dag, tol).generators_unitary;
        if (sol.dagger_compatible) ++result.compatible_count;
        result.solutions.push_back(std::move(sol));
    }
    return result;
}

}  // namespace ribcat
