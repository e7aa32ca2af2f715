#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ribcat/dagger.hpp"
#include "ribcat/errors.hpp"
#include "ribcat/fusion_ring.hpp"
#include "ribcat/skeletal.hpp"

namespace ribcat {

/// A built-in example category with its dagger structure and known
/// properties. Every entry passes the full verifier suite.
struct ZooEntry {
    std::string name;
    SkeletalData data;
    DaggerStructure dagger;
    struct Expected {
        std::vector<std::string> center;
        bool hermitian = true;
        bool modular = true;
    } expected;
};

namespace detail {

inline std::vector<std::vector<std::vector<unsigned>>> empty_tensor(std::size_t r) {
    return std::vector<std::vector<std::vector<unsigned>>>(
        r, std::vector<std::vector<unsigned>>(r, std::vector<unsigned>(r, 0)));
}

/// All admissible F entries set to 1.
inline FTable ones_f_table(const FusionRing& ring) {
    FTable f;
    const std::size_t r = ring.rank();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                for (std::size_t d = 0; d < r; ++d)
                    for (std::size_t e = 0; e < r; ++e)
                        for (std::size_t ff = 0; ff < r; ++ff)
                            if (ring.admissible(a, b, e) && ring.admissible(e, c, d) &&
                                ring.admissible(b, c, ff) && ring.admissible(a, ff, d))
                                f[{a, b, c, d, e, ff}] = Scalar::one();
    return f;
}

/// All admissible R entries set to 1.
inline RTable ones_r_table(const FusionRing& ring) {
    RTable rt;
    const std::size_t r = ring.rank();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                if (ring.admissible(a, b, c)) rt[{a, b, c}] = Scalar::one();
    return rt;
}

inline Scalar phase(double turns) {  // e^{2 pi i turns}
    const double arg = 2.0 * std::numbers::pi * turns;
    return Scalar::approximate(std::cos(arg), std::sin(arg));
}

inline ZooEntry make_trivial() {
    auto n = empty_tensor(1);
    n[0][0][0] = 1;
    FusionRing ring({"1"}, {0}, n);
    SkeletalData data(ring, ones_f_table(ring), ones_r_table(ring), {Scalar::one()}, {Scalar::one()},
                      ScalarMode::exact);
    return {"trivial", std::move(data), DaggerStructure{}, {{"1"}, true, true}};
}

inline FusionRing fibonacci_ring() {
    auto n = empty_tensor(2);
    n[0][0][0] = 1;
    n[0][1][1] = n[1][0][1] = 1;
    n[1][1][0] = 1;
    n[1][1][1] = 1;
    return FusionRing({"1", "tau"}, {0, 1}, n);
}

// Fibonacci F-matrix [[1/d, d^{-1/2}], [d^{-1/2}, -1/d]] for d = phi, and its
// Galois conjugate for d = 1 - phi (the off-diagonal becomes i sqrt(phi)).
inline ZooEntry make_fibonacci() {
    const double p = std::numbers::phi;
    FusionRing ring = fibonacci_ring();
    FTable f = ones_f_table(ring);
    f[{1, 1, 1, 1, 0, 0}] = Scalar::approximate(1.0 / p, 0.0);
    f[{1, 1, 1, 1, 0, 1}] = Scalar::approximate(1.0 / std::sqrt(p), 0.0);
    f[{1, 1, 1, 1, 1, 0}] = Scalar::approximate(1.0 / std::sqrt(p), 0.0);
    f[{1, 1, 1, 1, 1, 1}] = Scalar::approximate(-1.0 / p, 0.0);
    RTable r = ones_r_table(ring);
    r[{1, 1, 0}] = phase(-2.0 / 5.0);  // e^{-4 pi i / 5}
    r[{1, 1, 1}] = phase(3.0 / 10.0);  // e^{+3 pi i / 5}
    std::vector<Scalar> twist{Scalar::one(), phase(2.0 / 5.0)};
    SkeletalData data(ring, std::move(f), std::move(r), std::move(twist),
                      {Scalar::one(), Scalar::one()}, ScalarMode::approximate);
    return {"fibonacci", std::move(data), DaggerStructure{}, {{"1"}, true, true}};
}

inline ZooEntry make_yang_lee() {
    const double p = std::numbers::phi;
    FusionRing ring = fibonacci_ring();
    FTable f = ones_f_table(ring);
    f[{1, 1, 1, 1, 0, 0}] = Scalar::approximate(-p, 0.0);
    f[{1, 1, 1, 1, 0, 1}] = Scalar::approximate(0.0, std::sqrt(p));
    f[{1, 1, 1, 1, 1, 0}] = Scalar::approximate(0.0, std::sqrt(p));
    f[{1, 1, 1, 1, 1, 1}] = Scalar::approximate(p, 0.0);
    RTable r = ones_r_table(ring);
    r[{1, 1, 0}] = phase(1.0 / 5.0);    // e^{+2 pi i / 5}
    r[{1, 1, 1}] = phase(1.0 / 10.0);   // e^{+pi i / 5}
    std::vector<Scalar> twist{Scalar::one(), phase(-1.0 / 5.0)};
    SkeletalData data(ring, std::move(f), std::move(r), std::move(twist),
                      {Scalar::one(), Scalar::one()}, ScalarMode::approximate);
    return {"yang_lee", std::move(data), DaggerStructure{}, {{"1"}, false, true}};
}

// Ising with theta_sigma = e^{i pi / 8}; exact over the conductor-16 field.
inline ZooEntry make_ising() {
    auto n = empty_tensor(3);
    n[0][0][0] = 1;
    n[0][1][1] = n[1][0][1] = 1;
    n[0][2][2] = n[2][0][2] = 1;
    n[1][1][0] = n[1][1][2] = 1;  // sigma sigma = 1 + psi
    n[1][2][1] = n[2][1][1] = 1;  // sigma psi = sigma
    n[2][2][0] = 1;               // psi psi = 1
    FusionRing ring({"1", "sigma", "psi"}, {0, 1, 2}, n);

    const Scalar half = Scalar::rational(1, 2);
    const Scalar inv_sqrt2 =
        half * (Scalar::root_of_unity(16, 2) + Scalar::root_of_unity(16, 14));  // 1/sqrt(2)
    FTable f = ones_f_table(ring);
    f[{1, 1, 1, 1, 0, 0}] = inv_sqrt2;
    f[{1, 1, 1, 1, 0, 2}] = inv_sqrt2;
    f[{1, 1, 1, 1, 2, 0}] = inv_sqrt2;
    f[{1, 1, 1, 1, 2, 2}] = -inv_sqrt2;
    f[{2, 1, 2, 1, 1, 1}] = Scalar(-1);
    f[{1, 2, 1, 2, 1, 1}] = Scalar(-1);

    RTable r = ones_r_table(ring);
    r[{1, 1, 0}] = Scalar::root_of_unity(16, 15);  // e^{-i pi / 8}
    r[{1, 1, 2}] = Scalar::root_of_unity(16, 3);   // e^{+3 i pi / 8}
    r[{2, 2, 0}] = Scalar(-1);
    r[{1, 2, 1}] = Scalar::root_of_unity(16, 12);  // -i
    r[{2, 1, 1}] = Scalar::root_of_unity(16, 12);

    std::vector<Scalar> twist{Scalar::one(), Scalar::root_of_unity(16, 1), Scalar(-1)};
    SkeletalData data(ring, std::move(f), std::move(r), std::move(twist),
                      {Scalar::one(), Scalar::one(), Scalar::one()}, ScalarMode::exact);
    return {"ising", std::move(data), DaggerStructure{}, {{"1"}, true, true}};
}

inline FusionRing z2_ring(const std::string& nonunit) {
    auto n = empty_tensor(2);
    n[0][0][0] = 1;
    n[0][1][1] = n[1][0][1] = 1;
    n[1][1][0] = 1;
    return FusionRing({"1", nonunit}, {0, 1}, n);
}

// Semion: nontrivial associator F^{sss}_s = -1, R^{ss}_1 = i. The canonical
// pivotal coefficient is -1, which makes d_s = +1.
inline ZooEntry make_semion() {
    FusionRing ring = z2_ring("s");
    FTable f = ones_f_table(ring);
    f[{1, 1, 1, 1, 0, 0}] = Scalar(-1);
    RTable r = ones_r_table(ring);
    r[{1, 1, 0}] = Scalar::root_of_unity(4, 1);
    std::vector<Scalar> twist{Scalar::one(), Scalar::root_of_unity(4, 1)};
    SkeletalData data(ring, std::move(f), std::move(r), std::move(twist), {Scalar::one(), Scalar(-1)},
                      ScalarMode::exact);
    return {"semion", std::move(data), DaggerStructure{}, {{"1"}, true, true}};
}

inline ZooEntry make_vec_z2_symmetric() {
    FusionRing ring = z2_ring("x");
    SkeletalData data(ring, ones_f_table(ring), ones_r_table(ring), {Scalar::one(), Scalar::one()},
                      {Scalar::one(), Scalar::one()}, ScalarMode::exact);
    return {"vec_z2_symmetric", std::move(data), DaggerStructure{}, {{"1", "x"}, true, false}};
}

// Toric code: Z2 x Z2 fusion, trivial associator, e and m bosons with mutual
// statistics -1, fermion f = e (x) m.
inline ZooEntry make_toric_code() {
    auto n = empty_tensor(4);
    const std::size_t mult[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) n[a][b][mult[a][b]] = 1;
    FusionRing ring({"1", "e", "m", "f"}, {0, 1, 2, 3}, n);

    RTable r = ones_r_table(ring);
    r[{2, 1, 3}] = Scalar(-1);  // R^{me}_f
    r[{3, 3, 0}] = Scalar(-1);  // R^{ff}_1
    r[{3, 1, 2}] = Scalar(-1);  // R^{fe}_m
    r[{2, 3, 1}] = Scalar(-1);  // R^{mf}_e
    std::vector<Scalar> twist{Scalar::one(), Scalar::one(), Scalar::one(), Scalar(-1)};
    SkeletalData data(ring, ones_f_table(ring), std::move(r), std::move(twist),
                      {Scalar::one(), Scalar::one(), Scalar::one(), Scalar::one()}, ScalarMode::exact);
    return {"toric_code", std::move(data), DaggerStructure{}, {{"1"}, true, true}};
}

}  // namespace detail

inline const std::vector<std::string>& zoo_names() {
    static const std::vector<std::string> names{"trivial",           "fibonacci", "yang_lee", "ising",
                                                "semion",            "vec_z2_symmetric",
                                                "toric_code"};
    return names;
}

/// Fully populated built-in entry; throws an unknown-name error listing the
/// available entries.
inline ZooEntry builtin(const std::string& name) {
    if (name == "trivial") return detail::make_trivial();
    if (name == "fibonacci") return detail::make_fibonacci();
    if (name == "yang_lee") return detail::make_yang_lee();
    if (name == "ising") return detail::make_ising();
    if (name == "semion") return detail::make_semion();
    if (name == "vec_z2_symmetric") return detail::make_vec_z2_symmetric();
    if (name == "toric_code") return detail::make_toric_code();
    std::string msg = "unknown zoo entry '" + name + "'; available:";
    for (const auto& n : zoo_names()) msg += " " + n;
    throw LoadError(msg);
}

}  // namespace ribcat
