#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bcft/errors.hpp"
#include "bcft/properties.hpp"

using namespace bcft;

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

bool near(const Bicomplex& w, const Bicomplex& v, double tol) { return distance(w, v) <= tol; }

}  // namespace

TEST_CASE("linearity") {
    const auto e = two_sided_exp(1);
    const auto g = gaussian();
    const auto r = rect(1);
    SUBCASE("identity combination") {
        const auto rep = check_linearity(e, g, 1.0, 0.0, Bicomplex(0.4), 1e-7);
        CHECK(rep.pass);
        CHECK(rep.diff <= 1e-7);
    }
    SUBCASE("2 f - 3 g at 0") {
        const auto rep = check_linearity(e, g, 2.0, -3.0, Bicomplex::zero(), 1e-7);
        CHECK(rep.pass);
        CHECK(near(rep.lhs, Bicomplex(-3.5198848238930015), 1e-8));
        CHECK(near(rep.rhs, Bicomplex(-3.5198848238930015), 1e-8));
        CHECK(rep.partner == "gaussian");
    }
    SUBCASE("rect + rect at i1") {
        const auto rep = check_linearity(r, r, 1.0, 1.0, Bicomplex::i1(), 1e-7);
        CHECK(rep.pass);
        CHECK(near(rep.lhs, Bicomplex(2 * 2.3504023872876028), 1e-8));
    }
    SUBCASE("outside the intersection") {
        CHECK_THROWS_AS(check_linearity(e, g, 1.0, 1.0, 2.0 * Bicomplex::i1(), 1e-7), OutsideRegionError);
    }
}

TEST_CASE("shift") {
    SUBCASE("zero shift") {
        const auto rep = check_shift(two_sided_exp(1), 0.0, Bicomplex::from_units(0.3, 0.1, 0.2, -0.4), 1e-7);
        CHECK(rep.pass);
    }
    SUBCASE("gaussian at 0") {
        const auto rep = check_shift(gaussian(), 1.0, Bicomplex::zero(), 1e-7);
        CHECK(rep.pass);
        CHECK(near(rep.lhs, Bicomplex(kSqrt2Pi), 1e-8));
        CHECK(near(rep.rhs, Bicomplex(kSqrt2Pi), 1e-8));
    }
    SUBCASE("two_sided_exp, a = 0.5, w = 0.25 i1") {
        const auto rep = check_shift(two_sided_exp(1), 0.5, 0.25 * Bicomplex::i1(), 1e-7);
        CHECK(rep.pass);
        const double expected = std::exp(-0.125) * (2.0 / (1.0 - 0.0625));
        CHECK(std::abs(expected - 1.8826600588471369) <= 1e-15);
        CHECK(near(rep.rhs, Bicomplex(expected), 1e-8));
        CHECK(near(rep.lhs, Bicomplex(expected), 1e-8));
    }
}

TEST_CASE("scale") {
    SUBCASE("a = 1") { CHECK(check_scale(damped_osc(1, 2), 1.0, Bicomplex(0.6), 1e-7).pass); }
    SUBCASE("gaussian, a = -1") {
        const auto rep = check_scale(gaussian(), -1.0, Bicomplex::zero(), 1e-7);
        CHECK(rep.pass);
        CHECK(near(rep.lhs, Bicomplex(kSqrt2Pi), 1e-8));
    }
    SUBCASE("two_sided_exp, a = 2") {
        const auto rep = check_scale(two_sided_exp(1), 2.0, Bicomplex::zero(), 1e-7);
        CHECK(rep.pass);
        CHECK(near(rep.rhs, Bicomplex(1.0), 1e-8));
        CHECK(near(rep.lhs, Bicomplex(1.0), 1e-8));
    }
    SUBCASE("negative factor on a causal signal") {
        const auto w = Bicomplex::from_idempotent(Complex(0.5, 0.4), Complex(-1.0, -0.3));
        CHECK(check_scale(one_sided_exp(), -1.5, w, 1e-7).pass);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(check_scale(gaussian(), 0.0, Bicomplex::zero(), 1e-7), DomainError);
        // w / a = 1.5 i1 leaves the strip of two_sided_exp(1).
        CHECK_THROWS_AS(check_scale(two_sided_exp(1), 0.5, 0.75 * Bicomplex::i1(), 1e-7), OutsideRegionError);
    }
}

TEST_CASE("convolution") {
    SUBCASE("rect * rect at 0") {
        const auto rep = check_convolution(rect(1), rect(1), Bicomplex::zero(), 1e-6);
        CHECK(rep.pass);
        CHECK(near(rep.lhs, Bicomplex(4.0), 1e-7));
        CHECK(near(rep.rhs, Bicomplex(4.0), 1e-8));
    }
    SUBCASE("gaussian * gaussian at 0") {
        const auto rep = check_convolution(gaussian(), gaussian(), Bicomplex::zero(), 1e-6);
        CHECK(rep.pass);
        CHECK(near(rep.lhs, Bicomplex(2 * std::numbers::pi), 1e-7));
    }
    SUBCASE("two_sided_exp * gaussian at 0.5 i1") {
        const auto w = 0.5 * Bicomplex::i1();
        const auto rep = check_convolution(two_sided_exp(1), gaussian(), w, 1e-6);
        CHECK(rep.pass);
        const double expected = (8.0 / 3.0) * kSqrt2Pi * std::exp(0.125);
        CHECK(near(rep.rhs, Bicomplex(expected), 1e-8));
    }
    SUBCASE("causal pair off-axis") {
        const auto w = Bicomplex::from_idempotent(Complex(1.1, 0.3), Complex(-0.4, -0.5));
        CHECK(check_convolution(one_sided_exp(), damped_osc(1, 2), w, 1e-6).pass);
    }
}

TEST_CASE("mult_by_t") {
    SUBCASE("gaussian, n = 1, w = 0") {
        const auto rep = check_mult_by_t(gaussian(), 1, Bicomplex::zero(), 1e-5);
        CHECK(rep.pass);
        CHECK(magnitude(rep.lhs) <= 1e-9);
    }
    SUBCASE("two_sided_exp, n = 1, w = 0.25 i1") {
        const auto rep = check_mult_by_t(two_sided_exp(1), 1, 0.25 * Bicomplex::i1(), 1e-5);
        CHECK(rep.pass);
        // -i1 d/dw [2/(1+w^2)] = -i1 (-4w/(1+w^2)^2) at w = i1/4.
        CHECK(near(rep.lhs, Bicomplex(-1.1377777777777778), 1e-8));
        CHECK(near(rep.rhs, Bicomplex(-1.1377777777777778), 1e-5));
    }
    SUBCASE("gaussian, n = 2, w = 0") {
        const auto rep = check_mult_by_t(gaussian(), 2, Bicomplex::zero(), 1e-3);
        CHECK(rep.pass);
        CHECK(near(rep.lhs, Bicomplex(kSqrt2Pi), 1e-8));
    }
    SUBCASE("step size") {
        CHECK(mult_by_t_step(1, Complex(0.5)) == 1e-5);
        CHECK(mult_by_t_step(2, Complex(3.0, 4.0)) == doctest::Approx(5e-4));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(check_mult_by_t(gaussian(), 3, Bicomplex::zero(), 1e-3), DomainError);
        // Inside the strip but closer to its edge than ten steps.
        CHECK_THROWS_AS(check_mult_by_t(two_sided_exp(1), 1, (1.0 - 5e-5) * Bicomplex::i1(), 1e-5), DomainError);
    }
}

TEST_CASE("derivative of signal") {
    SUBCASE("gaussian, n = 1, w = 0") {
        const auto rep = check_derivative_of_signal(gaussian(), 1, Bicomplex::zero(), 1e-7);
        CHECK(rep.pass);
        CHECK(magnitude(rep.rhs) == 0.0);
    }
    SUBCASE("gaussian, n = 1, w = i1") {
        const auto rep = check_derivative_of_signal(gaussian(), 1, Bicomplex::i1(), 1e-7);
        CHECK(rep.pass);
        CHECK(near(rep.rhs, Bicomplex(4.132731354122493), 1e-8));
    }
    SUBCASE("gaussian, n = 2, w = 0.5 i1") {
        const auto rep = check_derivative_of_signal(gaussian(), 2, 0.5 * Bicomplex::i1(), 1e-7);
        CHECK(rep.pass);
        CHECK(near(rep.lhs, Bicomplex(0.7100954879529215), 1e-8));
    }
    SUBCASE("two_sided_exp, n = 1") {
        const auto w = Bicomplex::from_idempotent(Complex(0.7, 0.2), Complex(-1.2, -0.6));
        CHECK(check_derivative_of_signal(two_sided_exp(1), 1, w, 1e-7).pass);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(check_derivative_of_signal(rect(1), 1, Bicomplex::zero(), 1e-7), DomainError);
        CHECK_THROWS_AS(check_derivative_of_signal(two_sided_exp(1), 2, Bicomplex::zero(), 1e-7), DomainError);
    }
}

TEST_CASE("compact support") {
    const std::vector<Bicomplex> sample{50.0 * Bicomplex::i1(), Bicomplex::zero(), Bicomplex::from_units(3, 0, 0, 4),
                                        -40.0 * Bicomplex::i2()};
    const auto reps = check_compact_support_entire(rect(1), sample, 1e-6);
    REQUIRE(reps.size() == 4);
    for (const auto& r : reps) {
        CHECK(r.pass);
        CHECK(r.error.empty());
    }
    CHECK(std::abs(reps[0].rhs.a0() - 1.0369411057174145e20) <= 1e-6 * 1.0369411057174145e20);
    CHECK(near(reps[1].lhs, Bicomplex(2.0), 1e-8));
    CHECK(std::abs(reps[2].lhs.w1() - 0.18771045677679688) <= 1e-8);
    CHECK(std::abs(reps[2].lhs.w2() - 1.682941969615793) <= 1e-8);
    CHECK_THROWS_AS(check_compact_support_entire(gaussian(), sample, 1e-6), DomainError);
}

TEST_CASE("derived signal wrappers") {
    const auto e = two_sided_exp(1);
    CHECK(shifted(rect(1), 2.0).support.lo == 1.0);
    CHECK(shifted(rect(1), 2.0).breakpoints == std::vector<double>{1.0, 3.0});
    const auto flipped = scaled(one_sided_exp(), -2.0);
    CHECK(flipped.support.lo == -INFINITY);
    CHECK(flipped.support.hi == 0.0);
    CHECK(std::isinf(flipped.region.alpha()));
    CHECK(flipped.region.beta() == 2.0);
    CHECK(flipped.eval(-1.0) == std::exp(-2.0));
    CHECK(times_t_power(e, 2).eval(-3.0) == 9.0 * std::exp(-3.0));
    CHECK(intersect(ConvergenceRegion(1, 3), ConvergenceRegion(2, 0.5)).alpha() == 1.0);
    CHECK(intersect(ConvergenceRegion(1, 3), ConvergenceRegion(2, 0.5)).beta() == 0.5);
    CHECK_THROWS_AS(scaled(e, 0.0), DomainError);
    CHECK_THROWS_AS(times_t_power(e, -1), DomainError);
}

TEST_CASE("frequency sampling") {
    UnitRandom rng(5);
    const ConvergenceRegion r(1.0, ConvergenceRegion::kUnbounded);
    const auto ws = sample_frequencies(r, 200, rng, 0.2);
    REQUIRE(ws.size() == 200);
    CHECK(ws[0] == Bicomplex::zero());
    for (const auto& w : ws) {
        CHECK(r.margin(w) >= 0.2);
        for (int k = 1; k <= 2; ++k) {
            CHECK(std::abs(w.component(k).real()) <= 3.0);
            CHECK(std::abs(w.component(k).imag()) <= 1.5);
        }
    }
    UnitRandom a(9), b(9);
    for (int i = 0; i < 100; ++i) {
        const double x = a.next();
        CHECK(x == b.next());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    UnitRandom narrow(1);
    CHECK_THROWS_AS(sample_frequencies(ConvergenceRegion(0.1, 0.1), 3, narrow, 0.2), DomainError);
}

TEST_CASE("suite") {
    SUBCASE("filters and determinism") {
        SuiteOptions opts;
        opts.checks = {"linearity", "shift"};
        opts.signals = {"two_sided_exp", "rect"};
        opts.frequencies = 5;
        const auto first = run_suite(opts);
        opts.jobs = 4;
        const auto second = run_suite(opts);
        REQUIRE(first.size() == 20);
        REQUIRE(second.size() == first.size());
        for (std::size_t i = 0; i < first.size(); ++i) {
            CHECK(report_json(first[i]) == report_json(second[i]));
            CHECK(first[i].pass);
        }
        CHECK(first.front().check == "linearity");
        CHECK(first.front().signal == "rect");
        CHECK(first.front().index == 0);
        CHECK(first.front().w == Bicomplex::zero());
    }
    SUBCASE("seed changes the sample") {
        SuiteOptions opts;
        opts.checks = {"shift"};
        opts.signals = {"gaussian"};
        opts.frequencies = 3;
        const auto a = run_suite(opts);
        opts.seed = 7;
        const auto b = run_suite(opts);
        CHECK(a[1].w == a[1].w);
        CHECK_FALSE(a[1].w == b[1].w);
    }
    SUBCASE("rect convolution includes the value-4 case") {
        SuiteOptions opts;
        opts.checks = {"convolution"};
        opts.signals = {"rect"};
        opts.frequencies = 3;
        const auto reps = run_suite(opts);
        REQUIRE(reps.size() == 3);
        CHECK(reps[0].w == Bicomplex::zero());
        CHECK(near(reps[0].lhs, Bicomplex(4.0), 1e-7));
        for (const auto& r : reps) CHECK(r.pass);
    }
    SUBCASE("failures become reports") {
        SuiteOptions opts;
        opts.checks = {"shift"};
        opts.signals = {"two_sided_exp"};
        opts.frequencies = 2;
        opts.quadrature.max_panels = 2;
        const auto reps = run_suite(opts);
        REQUIRE(reps.size() == 2);
        CHECK_FALSE(reps[0].pass);
        CHECK_FALSE(reps[0].error.empty());
        CHECK(report_json(reps[0]).find("\"lhs\":{\"a0\":null") != std::string::npos);
    }
    SUBCASE("unknown names") {
        SuiteOptions opts;
        opts.checks = {"nosuch"};
        CHECK_THROWS_AS(run_suite(opts), DomainError);
        opts.checks = {};
        opts.signals = {"nosuch"};
        CHECK_THROWS_AS(run_suite(opts), DomainError);
    }
}

TEST_CASE("report JSON") {
    CheckReport r;
    r.check = "shift";
    r.signal = "gaussian";
    r.parameter = 0.5;
    r.index = 3;
    r.w = Bicomplex::zero();
    r.lhs = Bicomplex(1.0);
    r.rhs = Bicomplex(1.0);
    r.diff = 0.0;
    r.tol = 1e-7;
    r.pass = true;
    CHECK(report_json(r) ==
          "{\"check\":\"shift\",\"signal\":\"gaussian\",\"a\":0.5,\"index\":3,"
          "\"w\":{\"a0\":0,\"a1\":0,\"a2\":0,\"a3\":0},\"lhs\":{\"a0\":1,\"a1\":0,\"a2\":0,\"a3\":0},"
          "\"rhs\":{\"a0\":1,\"a1\":0,\"a2\":0,\"a3\":0},\"diff\":0,\"tol\":9.9999999999999995e-08,\"pass\":true}");
}
