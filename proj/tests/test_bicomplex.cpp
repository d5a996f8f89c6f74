#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "bcft/bicomplex.hpp"
#include "bcft/errors.hpp"
#include "oracles.hpp"

using namespace bcft;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool units_close(const Bicomplex& w, const std::array<double, 4>& a, double tol) {
    const auto u = w.units();
    for (int k = 0; k < 4; ++k) {
        if (std::abs(u[k] - a[k]) > tol) return false;
    }
    return true;
}

Bicomplex random_bicomplex(std::mt19937_64& rng, double span = 10.0) {
    std::uniform_real_distribution<double> d(-span, span);
    return Bicomplex::from_units(d(rng), d(rng), d(rng), d(rng));
}

}  // namespace

TEST_CASE("from_units computes the idempotent pair") {
    SUBCASE("e1") {
        const auto w = Bicomplex::from_units(0.5, 0, 0, 0.5);
        CHECK(w.w1() == Complex(1.0, 0.0));
        CHECK(w.w2() == Complex(0.0, 0.0));
        CHECK(w == Bicomplex::e1());
    }
    SUBCASE("zero") {
        const auto w = Bicomplex::from_units(0, 0, 0, 0);
        CHECK(w == Bicomplex::zero());
    }
    SUBCASE("(1,2,3,4)") {
        const auto w = Bicomplex::from_units(1, 2, 3, 4);
        const auto expected = oracle::components({1, 2, 3, 4});
        CHECK(w.w1() == Complex(5.0, -1.0));
        CHECK(w.w2() == Complex(-3.0, 5.0));
        CHECK(w.w1() == expected[0]);
        CHECK(w.w2() == expected[1]);
    }
    SUBCASE("non-finite input") {
        CHECK_THROWS_AS(Bicomplex::from_units(NAN, 0, 0, 0), DomainError);
        CHECK_THROWS_AS(Bicomplex::from_units(0, 0, INFINITY, 0), DomainError);
    }
}

TEST_CASE("to_idempotent projections") {
    CHECK(Bicomplex::e1().w1() == Complex(1.0));
    CHECK(Bicomplex::e1().w2() == Complex(0.0));
    const auto i2 = Bicomplex::from_units(0, 0, 1, 0);
    const auto p = i2.to_idempotent();
    CHECK(p.w1 == Complex(0.0, -1.0));
    CHECK(p.w2 == Complex(0.0, 1.0));
    // P1 = z1 - i1 z2, P2 = z1 + i1 z2 for w = z1 + i2 z2.
    const auto w = Bicomplex::from_planes(Complex(1, 2), Complex(3, 4));
    CHECK(units_close(w, {1, 2, 3, 4}, 0.0));
}

TEST_CASE("from_idempotent inverts to_idempotent") {
    CHECK(units_close(Bicomplex::from_idempotent(Complex(1), Complex(1)), {1, 0, 0, 0}, 0.0));
    CHECK(units_close(Bicomplex::from_idempotent(Complex(1), Complex(0)), {0.5, 0, 0, 0.5}, 0.0));
    CHECK(units_close(Bicomplex::from_idempotent(Complex(5, -1), Complex(-3, 5)), {1, 2, 3, 4}, 0.0));
}

TEST_CASE("add") {
    CHECK(Bicomplex::e1() + Bicomplex::e2() == Bicomplex::one());
    const auto w = Bicomplex::from_units(1, 2, 3, 4);
    CHECK(w + Bicomplex::zero() == w);
    CHECK(units_close(w + Bicomplex::from_units(4, 3, 2, 1), {5, 5, 5, 5}, 0.0));
}

TEST_CASE("mul unit table") {
    CHECK(Bicomplex::e1() * Bicomplex::e2() == Bicomplex::zero());
    CHECK(units_close(Bicomplex::i2() * Bicomplex::i2(), {-1, 0, 0, 0}, 0.0));
    CHECK(units_close(Bicomplex::i1() * Bicomplex::i1(), {-1, 0, 0, 0}, 0.0));
    CHECK(units_close(Bicomplex::j() * Bicomplex::j(), {1, 0, 0, 0}, 0.0));
    CHECK(units_close(Bicomplex::i1() * Bicomplex::i2(), {0, 0, 0, 1}, 0.0));
    CHECK(Bicomplex::e1() * Bicomplex::e1() == Bicomplex::e1());
    CHECK(Bicomplex::e2() * Bicomplex::e2() == Bicomplex::e2());
}

TEST_CASE("invert") {
    SUBCASE("real scalar") {
        CHECK(units_close(invert(Bicomplex(2.0)), {0.5, 0, 0, 0}, 0.0));
    }
    SUBCASE("e1 is a zero divisor") {
        try {
            invert(Bicomplex::e1());
            FAIL("expected ZeroDivisorError");
        } catch (const ZeroDivisorError& e) {
            CHECK_FALSE(e.zero_operand());
        }
    }
    SUBCASE("zero operand has its own detail") {
        try {
            invert(Bicomplex::zero());
            FAIL("expected ZeroDivisorError");
        } catch (const ZeroDivisorError& e) {
            CHECK(e.zero_operand());
        }
    }
    SUBCASE("1 + i1") {
        const auto w = Bicomplex::from_units(1, 1, 0, 0);
        const auto v = invert(w);
        CHECK(units_close(v, {0.5, -0.5, 0, 0}, 1e-15));
        const auto product = oracle::product_by_planes(w.units(), v.units());
        CHECK(std::abs(product[0] - 1.0) <= 1e-14);
        for (int k = 1; k < 4; ++k) CHECK(std::abs(product[k]) <= 1e-14);
    }
    SUBCASE("negative tolerance") { CHECK_THROWS_AS(invert(Bicomplex::one(), -1.0), DomainError); }
}

TEST_CASE("is_zero_divisor") {
    CHECK(is_zero_divisor(Bicomplex::e2()));
    CHECK_FALSE(is_zero_divisor(Bicomplex::one()));
    CHECK_FALSE(is_zero_divisor(Bicomplex::zero()));
    // Pair (2, 2 i1): both moduli equal 2.
    const auto w = Bicomplex::from_units(1, 1, 1, 1);
    CHECK(w.w1() == Complex(2.0, 0.0));
    CHECK(w.w2() == Complex(0.0, 2.0));
    CHECK_FALSE(is_zero_divisor(w));
}

TEST_CASE("singular cone h0 = -h3, h1 = h2 or h0 = h3, h1 = -h2") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double h0 = d(rng), h1 = d(rng);
        const auto first = Bicomplex::from_units(h0, h1, h1, -h0);
        const auto second = Bicomplex::from_units(h0, h1, -h1, h0);
        CHECK(is_zero_divisor(first));
        CHECK(is_zero_divisor(second));
        CHECK_THROWS_AS(invert(first), ZeroDivisorError);
        CHECK_THROWS_AS(invert(second), ZeroDivisorError);
    }
}

TEST_CASE("property: projections are ring homomorphisms") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10000; ++i) {
        const auto w = random_bicomplex(rng);
        const auto v = random_bicomplex(rng);
        const auto p = w * v;
        for (int k = 1; k <= 2; ++k) {
            const Complex expected = w.component(k) * v.component(k);
            CHECK(std::abs(p.component(k) - expected) <= 8 * kEps * std::max(1.0, std::abs(expected)));
        }
        // The plane-form product agrees with the idempotent product.
        const auto ref = oracle::product_by_planes(w.units(), v.units());
        const double scale = std::max(1.0, magnitude(w) * magnitude(v));
        CHECK(units_close(p, ref, 1e-12 * scale));
    }
}

TEST_CASE("property: ring laws") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10000; ++i) {
        const auto a = random_bicomplex(rng);
        const auto b = random_bicomplex(rng);
        const auto c = random_bicomplex(rng);
        const double s = std::max({1.0, magnitude(a), magnitude(b), magnitude(c)});
        CHECK(distance((a + b) + c, a + (b + c)) <= 1e-12 * s);
        CHECK(distance(a + b, b + a) <= 1e-12 * s);
        CHECK(distance((a * b) * c, a * (b * c)) <= 1e-12 * s * s * s);
        CHECK(distance(a * b, b * a) <= 1e-12 * s * s);
        CHECK(distance(a * (b + c), a * b + a * c) <= 1e-12 * s * s);
        CHECK(a + Bicomplex::zero() == a);
        CHECK(a * Bicomplex::one() == a);
    }
}

TEST_CASE("property: invert round trip") {
    std::mt19937_64 rng(3);
    int inverted = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto w = random_bicomplex(rng);
        try {
            const auto v = invert(w);
            ++inverted;
            const auto p = w * v;
            CHECK(std::abs(p.w1() - 1.0) <= 1e-12);
            CHECK(std::abs(p.w2() - 1.0) <= 1e-12);
        } catch (const ZeroDivisorError&) {
        }
    }
    CHECK(inverted > 9900);
}

TEST_CASE("property: four-unit round trip") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> d(-1e3, 1e3);
    for (int i = 0; i < 10000; ++i) {
        const std::array<double, 4> a{d(rng), d(rng), d(rng), d(rng)};
        const auto w = Bicomplex::from_idempotent(Bicomplex::from_units(a).to_idempotent());
        const double scale = std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2]), std::abs(a[3])});
        CHECK(units_close(w, a, 4 * kEps * scale));
    }
}

TEST_CASE("exp and pow act componentwise") {
    const auto w = Bicomplex::from_units(0.3, -0.2, 0.5, 0.1);
    const auto e = exp(w);
    CHECK(std::abs(e.w1() - std::exp(w.w1())) == 0.0);
    // exp(i1 i2 x) = cosh x + i1 i2 sinh x since (i1 i2)^2 = 1.
    const auto h = exp(0.7 * Bicomplex::j());
    CHECK(units_close(h, {std::cosh(0.7), 0, 0, std::sinh(0.7)}, 1e-15));
    CHECK(distance(pow(w, 3), w * w * w) == 0.0);
    CHECK(pow(w, 0) == Bicomplex::one());
    CHECK_THROWS_AS(pow(w, -1), DomainError);
}

TEST_CASE("JSON serialization") {
    const auto w = Bicomplex::from_units(0.1, -2.5, 0.75, 0.0);
    const std::string text = to_json(w);
    CHECK(text.find("\"a0\":0.10000000000000001") != std::string::npos);
    const auto back = bicomplex_from_json(text);
    CHECK(back.units() == w.units());
    CHECK_THROWS_AS(bicomplex_from_json("{\"a0\":1}"), DomainError);
    CHECK_THROWS_AS(bicomplex_from_json("[1,2,3,4]"), DomainError);
    CHECK_THROWS_AS(bicomplex_from_json("{not json"), DomainError);
}
