#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ribcat/scalar.hpp"

using namespace ribcat;

namespace {

// Independent evaluation oracle: sum coefficients against e^{2 pi i k / n}
// computed with std::polar, bypassing Scalar::to_complex.
std::complex<double> eval_oracle(unsigned n, const std::vector<std::pair<long long, double>>& terms) {
    std::complex<double> z = 0;
    for (const auto& [k, coeff] : terms)
        z += coeff * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
    return z;
}

Scalar random_exact(std::mt19937& rng) {
    static const unsigned conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
    std::uniform_int_distribution<std::size_t> pick_n(0, std::size(conductors) - 1);
    const unsigned n = conductors[pick_n(rng)];
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), exp_pick(0, static_cast<int>(n) - 1),
        items(1, 3);
    Scalar s = Scalar::zero();
    const int count = items(rng);
    for (int i = 0; i < count; ++i)
        s = s + Scalar::rational(num(rng), den(rng)) * Scalar::root_of_unity(n, exp_pick(rng));
    return s;
}

}  // namespace

TEST_CASE("roots of unity evaluate accurately") {
    CHECK(std::abs(approx(Scalar::root_of_unity(1, 0)) - std::complex<double>(1, 0)) < 1e-12);
    const auto z8 = approx(Scalar::root_of_unity(8, 1));
    CHECK(std::abs(z8 - std::complex<double>(std::sqrt(0.5), std::sqrt(0.5))) < 1e-12);
    for (unsigned n = 1; n <= 24; ++n)
        for (unsigned k = 0; k < n; ++k) {
            const auto z = approx(Scalar::root_of_unity(n, k));
            CHECK(std::abs(z - std::polar(1.0, 2.0 * std::numbers::pi * k / n)) < 1e-12);
        }
}

TEST_CASE("conjugation on exact scalars") {
    CHECK(exact_equal(conjugate(Scalar::root_of_unity(5, 1)), Scalar::root_of_unity(5, 4)));
    CHECK(exact_equal(conjugate(Scalar::rational(3, 2)), Scalar::rational(3, 2)));
    const Scalar z = Scalar::approximate(0.309, 0.951);
    CHECK(std::abs(approx(conjugate(z)) - std::complex<double>(0.309, -0.951)) < 1e-15);
}

TEST_CASE("golden ratio over conductor 5") {
    // phi = -zeta_5^2 - zeta_5^3
    const Scalar phi = -(Scalar::root_of_unity(5, 2) + Scalar::root_of_unity(5, 3));
    const auto z = approx(phi);
    CHECK(std::abs(z - eval_oracle(5, {{2, -1.0}, {3, -1.0}})) < 1e-14);
    CHECK(std::abs(z.real() - 1.6180339887) < 1e-9);
    CHECK(std::abs(z.imag()) < 1e-12);
    CHECK(near_equal(phi, Scalar::approximate(1.618033988, 0.0), Tolerance{1e-6}));
}

TEST_CASE("near_equal semantics") {
    CHECK(near_equal(Scalar::root_of_unity(4, 2), Scalar(-1)));
    CHECK(near_equal(Scalar::one(), Scalar::approximate(1.0 + 1e-12, 0.0), Tolerance{1e-9}));
    CHECK_FALSE(near_equal(Scalar::one(), Scalar::approximate(1.0 + 1e-6, 0.0), Tolerance{1e-9}));
    // exact-mode equality is representation-independent across conductors
    CHECK(exact_equal(Scalar::root_of_unity(2, 1), Scalar(-1)));
    CHECK(exact_equal(Scalar::root_of_unity(6, 3), Scalar(-1)));
}

TEST_CASE("field axioms hold exactly on random exact scalars") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar a = random_exact(rng), b = random_exact(rng), c = random_exact(rng);
        CHECK(exact_equal((a + b) + c, a + (b + c)));
        CHECK(exact_equal((a * b) * c, a * (b * c)));
        CHECK(exact_equal(a * (b + c), a * b + a * c));
        CHECK(exact_equal(a + b, b + a));
        CHECK(exact_equal(a * b, b * a));
        if (!a.is_zero()) {
            CHECK(exact_equal(a * a.inverse(), Scalar::one()));
        }
    }
}

TEST_CASE("conjugation is an involutive field automorphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar a = random_exact(rng), b = random_exact(rng);
        CHECK(exact_equal(conjugate(conjugate(a)), a));
        CHECK(exact_equal(conjugate(a * b), conjugate(a) * conjugate(b)));
        CHECK(exact_equal(conjugate(a + b), conjugate(a) + conjugate(b)));
        CHECK(std::abs(approx(conjugate(a)) - std::conj(approx(a))) < 1e-12);
    }
}

TEST_CASE("sums and products of exact scalars stay exact") {
    const Scalar a = Scalar::root_of_unity(8, 3) * Scalar::rational(2, 7);
    const Scalar b = Scalar::root_of_unity(12, 5);
    CHECK((a + b).exact());
    CHECK((a * b).exact());
    CHECK(conjugate(a).exact());
    CHECK_FALSE((a + Scalar::approximate(0.5, 0.0)).exact());
}

TEST_CASE("root-of-unity recognition") {
    CHECK(Scalar::root_of_unity(16, 3).is_root_of_unity());
    CHECK(Scalar(-1).is_root_of_unity());
    CHECK_FALSE(Scalar::rational(1, 2).is_root_of_unity());
    CHECK_FALSE(Scalar::zero().is_root_of_unity());
    CHECK(Scalar::root_of_unity(16, 3).unit_modulus());
    CHECK_FALSE(Scalar::rational(2, 1).unit_modulus());
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), LoadError);
    CHECK_THROWS_AS(parse_rational("abc"), LoadError);
    CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("deterministic approximation") {
    const Scalar s = Scalar::root_of_unity(7, 2) + Scalar::rational(1, 3);
    CHECK(approx(s) == approx(s));
}
