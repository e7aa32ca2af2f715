#pragma once

#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ribcat/errors.hpp"
#include "ribcat/matrix.hpp"
#include "ribcat/skeletal.hpp"

namespace ribcat {

inline constexpr std::size_t kMaxWordLength = 8;

/// Left-nested fusion tree: leaves x_0..x_{m-1} fused as
/// ((x_0 x_1) x_2) ... with strictly internal charges internal[j] = charge of
/// the first j+2 leaves (the final charge is stored as root).
struct FusionTree {
    std::vector<std::size_t> leaves;
    std::size_t root = 0;
    std::vector<std::size_t> internal;  // size max(m-2, 0)

    /// Charge carried after fusing the first j+1 leaves.
    std::size_t charge_after(std::size_t j) const {
        if (j == 0) return leaves.at(0);
        if (j + 1 == leaves.size()) return root;
        return internal.at(j - 1);
    }

    friend bool operator==(const FusionTree& a, const FusionTree& b) {
        return a.leaves == b.leaves && a.root == b.root && a.internal == b.internal;
    }
};

inline std::string tree_name(const FusionTree& t, const FusionRing& ring) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < t.leaves.size(); ++i) {
        if (i) os << ",";
        os << ring.label(t.leaves[i]);
    }
    os << " ->";
    for (std::size_t v : t.internal) os << " " << ring.label(v);
    os << " | " << ring.label(t.root) << "]";
    return os.str();
}

namespace detail {

inline void check_word(const std::vector<std::size_t>& word, const FusionRing& ring) {
    if (word.empty()) throw ComputeError("empty tensor word");
    if (word.size() > kMaxWordLength)
        throw ComputeError("tensor word exceeds the desk-scale cap of " + std::to_string(kMaxWordLength));
    for (std::size_t x : word)
        if (x >= ring.rank()) throw LoadError("unknown label index in tensor word");
}

inline void enumerate_rec(const std::vector<std::size_t>& word, std::size_t pos, std::size_t charge,
                          std::vector<std::size_t>& internal, std::size_t root, const FusionRing& ring,
                          std::vector<FusionTree>& out) {
    if (pos == word.size()) {
        if (charge == root) out.push_back(FusionTree{word, root, internal});
        return;
    }
    const bool last = (pos + 1 == word.size());
    for (std::size_t next = 0; next < ring.rank(); ++next) {
        if (!ring.admissible(charge, word[pos], next)) continue;
        if (!last) internal.push_back(next);
        enumerate_rec(word, pos + 1, next, internal, root, ring, out);
        if (!last) internal.pop_back();
    }
}

}  // namespace detail

/// All left-nested fusion trees of the word with the given total charge,
/// in lexicographic order of internal charges.
inline std::vector<FusionTree> enumerate_trees(const std::vector<std::size_t>& word, std::size_t root,
                                               const FusionRing& ring) {
    detail::check_word(word, ring);
    std::vector<FusionTree> out;
    if (word.size() == 1) {
        if (word[0] == root) out.push_back(FusionTree{word, root, {}});
        return out;
    }
    std::vector<std::size_t> internal;
    detail::enumerate_rec(word, 1, word[0], internal, root, ring, out);
    return out;
}

/// Trees of every total charge, ordered by root then internals.
inline std::vector<FusionTree> enumerate_trees_all_roots(const std::vector<std::size_t>& word,
                                                         const FusionRing& ring) {
    std::vector<FusionTree> out;
    for (std::size_t root = 0; root < ring.rank(); ++root) {
        auto trees = enumerate_trees(word, root, ring);
        out.insert(out.end(), trees.begin(), trees.end());
    }
    return out;
}

/// Number of admissible left-nested fusion paths from the word to root.
inline std::size_t hom_dim(const std::vector<std::size_t>& word, std::size_t root,
                           const FusionRing& ring) {
    if (root >= ring.rank()) throw LoadError("unknown root label index");
    return enumerate_trees(word, root, ring).size();
}

/// A linear map between hom spaces, expressed in fusion-tree bases. Entry
/// (i, j) is the coefficient of target tree i in the image of source tree j.
struct MorphismMatrix {
    std::vector<FusionTree> source;
    std::vector<FusionTree> target;
    ScalarMatrix mat;

    bool endomorphism() const { return source == target; }
};

inline MorphismMatrix compose(const MorphismMatrix& g, const MorphismMatrix& f) {
    if (!(f.target == g.source)) throw ComputeError("ill-typed composite: tree bases do not match");
    return MorphismMatrix{f.source, g.target, g.mat * f.mat};
}

inline MorphismMatrix identity_on(const std::vector<std::size_t>& word, const SkeletalData& data) {
    auto trees = enumerate_trees_all_roots(word, data.ring());
    return MorphismMatrix{trees, trees, ScalarMatrix::identity(trees.size())};
}

inline bool near_equal(const MorphismMatrix& a, const MorphismMatrix& b, Tolerance tol = {}) {
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    return near_equal(a.mat, b.mat, tol);
}

namespace detail {

// Index of the unit label inside an FBlock axis list.
inline std::size_t axis_index(const std::vector<std::size_t>& labels, std::size_t want,
                              const char* what) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == want) return i;
    throw ComputeError(std::string("label not present in F-block axis: ") + what);
}

inline std::size_t axis_index_tree(const std::vector<FusionTree>& basis, const FusionTree& t) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == t) return i;
    throw ComputeError("tree not present in basis");
}

}  // namespace detail

/// Left evaluation normalization A_a = 1 / [F^{a a* a}_a]_{00}; the zigzag
/// (id (x) ev) o (coev (x) id) = id then holds by construction.
inline Scalar left_ev_coefficient(std::size_t a, const SkeletalData& data) {
    const std::size_t abar = data.ring().dual(a);
    return data.F(a, abar, a, a, 0, 0).inverse();
}

/// coev_a : 1 -> a (x) a*   (coefficient 1 on the vacuum channel)
inline MorphismMatrix coevaluation(std::size_t a, const SkeletalData& data) {
    const std::size_t abar = data.ring().dual(a);
    MorphismMatrix m;
    m.source = enumerate_trees({0}, 0, data.ring());
    m.target = enumerate_trees({a, abar}, 0, data.ring());
    if (m.target.empty()) throw ComputeError("no vacuum channel in a (x) a*: duality data inconsistent");
    m.mat = ScalarMatrix(1, 1);
    m.mat(0, 0) = Scalar::one();
    return m;
}

/// ev_a : a* (x) a -> 1
inline MorphismMatrix evaluation(std::size_t a, const SkeletalData& data) {
    const std::size_t abar = data.ring().dual(a);
    MorphismMatrix m;
    m.source = enumerate_trees({abar, a}, 0, data.ring());
    m.target = enumerate_trees({0}, 0, data.ring());
    m.mat = ScalarMatrix(1, 1);
    m.mat(0, 0) = left_ev_coefficient(a, data);
    return m;
}

/// Right-handed coevaluation coev'_a : 1 -> a* (x) a, carrying 1/t_a.
inline MorphismMatrix coevaluation_right(std::size_t a, const SkeletalData& data) {
    const std::size_t abar = data.ring().dual(a);
    MorphismMatrix m;
    m.source = enumerate_trees({0}, 0, data.ring());
    m.target = enumerate_trees({abar, a}, 0, data.ring());
    m.mat = ScalarMatrix(1, 1);
    m.mat(0, 0) = data.pivotal(a).inverse();
    return m;
}

/// Right-handed evaluation ev'_a : a (x) a* -> 1, carrying t_a times the left
/// evaluation coefficient of a*.
inline MorphismMatrix evaluation_right(std::size_t a, const SkeletalData& data) {
    const std::size_t abar = data.ring().dual(a);
    MorphismMatrix m;
    m.source = enumerate_trees({a, abar}, 0, data.ring());
    m.target = enumerate_trees({0}, 0, data.ring());
    m.mat = ScalarMatrix(1, 1);
    m.mat(0, 0) = data.pivotal(a) * left_ev_coefficient(abar, data);
    return m;
}

/// The (coev, ev) pair of the left duality, normalized so both zigzag
/// identities hold. The pivotal coefficient enters the right-handed pair.
inline std::pair<MorphismMatrix, MorphismMatrix> cup_cap(std::size_t a, const SkeletalData& data) {
    return {coevaluation(a, data), evaluation(a, data)};
}
inline std::pair<MorphismMatrix, MorphismMatrix> cup_cap_right(std::size_t a, const SkeletalData& data) {
    return {coevaluation_right(a, data), evaluation_right(a, data)};
}

/// Quantum dimension by right loop closure: ev'_a o coev_a.
inline Scalar qdim(std::size_t a, const SkeletalData& data) {
    const MorphismMatrix loop = compose(evaluation_right(a, data), coevaluation(a, data));
    return loop.mat(0, 0);
}

/// Full categorical trace: close every strand; in the tree basis this weights
/// each diagonal entry by the quantum dimension of its total charge.
inline Scalar quantum_trace(const MorphismMatrix& f, const SkeletalData& data) {
    if (!f.endomorphism()) throw ComputeError("quantum_trace requires an endomorphism matrix");
    Scalar acc = Scalar::zero();
    for (std::size_t i = 0; i < f.source.size(); ++i)
        acc = acc + f.mat(i, i) * qdim(f.source[i].root, data);
    return acc;
}

/// Double braiding of a past b: diagonal in the fusion-channel basis of
/// a (x) b with entries R^{ba}_c R^{ab}_c. Equals the identity iff a is
/// transparent to b.
inline MorphismMatrix monodromy(std::size_t a, std::size_t b, const SkeletalData& data) {
    if (!data.braided()) throw ComputeError("monodromy requires R data");
    MorphismMatrix m;
    m.source = enumerate_trees_all_roots({a, b}, data.ring());
    m.target = m.source;
    m.mat = ScalarMatrix(m.source.size(), m.source.size());
    for (std::size_t i = 0; i < m.source.size(); ++i) {
        const std::size_t c = m.source[i].root;
        m.mat(i, i) = data.R(b, a, c) * data.R(a, b, c);
    }
    return m;
}

/// Braiding morphism c_{a,b} : a (x) b -> b (x) a, diagonal across matching
/// fusion channels with entries R^{ab}_c.
inline MorphismMatrix braiding_morphism(std::size_t a, std::size_t b, const SkeletalData& data) {
    if (!data.braided()) throw ComputeError("braiding requires R data");
    MorphismMatrix m;
    m.source = enumerate_trees_all_roots({a, b}, data.ring());
    m.target = enumerate_trees_all_roots({b, a}, data.ring());
    if (m.source.size() != m.target.size())
        throw ComputeError("braiding: channel bases of a(x)b and b(x)a differ (non-commutative ring)");
    m.mat = ScalarMatrix(m.target.size(), m.source.size());
    for (std::size_t j = 0; j < m.source.size(); ++j) {
        const std::size_t c = m.source[j].root;
        for (std::size_t i = 0; i < m.target.size(); ++i)
            if (m.target[i].root == c) m.mat(i, j) = data.R(a, b, c);
    }
    return m;
}

/// Endomorphism of the word acting on adjacent leaves (pos, pos+1), diagonal
/// in their fused channel with eigenvalue eigen(e). For pos >= 1 this is the
/// usual F-conjugated local action.
inline MorphismMatrix local_channel_op(const std::vector<std::size_t>& word, std::size_t pos,
                                       const std::function<Scalar(std::size_t)>& eigen,
                                       const SkeletalData& data) {
    detail::check_word(word, data.ring());
    if (pos + 1 >= word.size()) throw ComputeError("local operator position out of range");
    const FusionRing& ring = data.ring();
    MorphismMatrix m;
    m.source = enumerate_trees_all_roots(word, ring);
    m.target = m.source;
    m.mat = ScalarMatrix(m.source.size(), m.source.size());
    const std::size_t x = word[pos], y = word[pos + 1];

    if (pos == 0) {
        for (std::size_t j = 0; j < m.source.size(); ++j)
            m.mat(j, j) = eigen(m.source[j].charge_after(1));
        return m;
    }
    for (std::size_t j = 0; j < m.source.size(); ++j) {
        const FusionTree& src = m.source[j];
        const std::size_t p = src.charge_after(pos - 1);
        const std::size_t q = src.charge_after(pos + 1);
        const auto blk = data.f_block(p, x, y, q);
        const ScalarMatrix inv = blk.m.inverse();
        const std::size_t row = detail::axis_index(blk.e_labels, src.charge_after(pos), "source charge");
        for (std::size_t i = 0; i < m.target.size(); ++i) {
            const FusionTree& dst = m.target[i];
            // target differs from source only in the charge after (pos+1) leaves
            bool same = dst.root == src.root && dst.leaves == src.leaves;
            for (std::size_t t = 0; same && t + 2 < dst.leaves.size(); ++t)
                if (t != pos - 1 && dst.internal[t] != src.internal[t]) same = false;
            if (!same) continue;
            const std::size_t col = detail::axis_index(blk.e_labels, dst.charge_after(pos), "target charge");
            Scalar acc = Scalar::zero();
            for (std::size_t ei = 0; ei < blk.f_labels.size(); ++ei)
                acc = acc + blk.m(row, ei) * eigen(blk.f_labels[ei]) * inv(ei, col);
            m.mat(i, j) = acc;
        }
    }
    return m;
}

/// Generators sigma_1 .. sigma_{n-1} of the braid group action on the fusion
/// tree space of n identical anyons with the given total charge.
inline std::vector<MorphismMatrix> braid_rep(std::size_t n, std::size_t anyon, std::size_t root,
                                             const SkeletalData& data) {
    if (!data.braided()) throw ComputeError("braid_rep requires R data");
    if (n < 2 || n > kMaxWordLength)
        throw ComputeError("strand count outside the supported range 2.." + std::to_string(kMaxWordLength));
    const std::vector<std::size_t> word(n, anyon);
    if (enumerate_trees(word, root, data.ring()).empty())
        throw ComputeError("empty hom space: no fusion tree from " + std::to_string(n) + " strands of " +
                           data.ring().label(anyon) + " to " + data.ring().label(root));
    auto trees = enumerate_trees(word, root, data.ring());
    auto eigen = [&](std::size_t e) { return data.R(anyon, anyon, e); };

    std::vector<MorphismMatrix> gens;
    for (std::size_t pos = 0; pos + 1 < n; ++pos) {
        MorphismMatrix full = local_channel_op(word, pos, eigen, data);
        // restrict the all-roots matrix to the requested total charge
        MorphismMatrix g;
        g.source = trees;
        g.target = trees;
        g.mat = ScalarMatrix(trees.size(), trees.size());
        for (std::size_t i = 0; i < trees.size(); ++i) {
            std::size_t fi = detail::axis_index_tree(full.source, trees[i]);
            for (std::size_t j = 0; j < trees.size(); ++j)
                g.mat(i, j) = full.mat(fi, detail::axis_index_tree(full.source, trees[j]));
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

/// Zigzag identities for both duality pairs, per label, as 1x1 composites
/// through the three-leaf words (a, a*, a) and (a*, a, a*).
inline ValidationReport check_zigzag(const SkeletalData& data, Tolerance tol = {}) {
    ValidationReport report;
    auto& check = report.add("zigzag");
    const FusionRing& ring = data.ring();
    for (std::size_t a = 0; a < ring.rank(); ++a) {
        const std::size_t abar = ring.dual(a);
        const Scalar A = left_ev_coefficient(a, data);
        const Scalar B = data.pivotal(a).inverse();
        const Scalar C = data.pivotal(a) * left_ev_coefficient(abar, data);

        const auto blk_a = data.f_block(a, abar, a, a);       // word (a, a*, a), charge a
        const auto blk_ab = data.f_block(abar, a, abar, abar);  // word (a*, a, a*), charge a*
        const ScalarMatrix inv_a = blk_a.m.inverse();
        const ScalarMatrix inv_ab = blk_ab.m.inverse();
        const std::size_t ea0 = detail::axis_index(blk_a.e_labels, 0, "vacuum channel");
        const std::size_t fa0 = detail::axis_index(blk_a.f_labels, 0, "vacuum channel");
        const std::size_t eb0 = detail::axis_index(blk_ab.e_labels, 0, "vacuum channel");
        const std::size_t fb0 = detail::axis_index(blk_ab.f_labels, 0, "vacuum channel");

        const Scalar one = Scalar::one();
        const Scalar zz1 = A * blk_a.m(ea0, fa0);              // (id (x) ev) o (coev (x) id) on a
        const Scalar zz2 = A * inv_ab(fb0, eb0);               // (ev (x) id) o (id (x) coev) on a*
        const Scalar zz1r = C * B * inv_a(fa0, ea0);           // right pair on a
        const Scalar zz2r = B * C * blk_ab.m(eb0, fb0);        // right pair on a*
        const char* names[4] = {"left-zigzag-a", "left-zigzag-dual", "right-zigzag-a", "right-zigzag-dual"};
        const Scalar vals[4] = {zz1, zz2, zz1r, zz2r};
        for (int i = 0; i < 4; ++i)
            detail::record_instance(check, near_equal(vals[i], one, tol),
                                    ring.label(a) + std::string(":") + names[i], vals[i], one);
    }
    return report;
}

}  // namespace ribcat
