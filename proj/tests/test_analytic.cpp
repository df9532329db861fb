#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>
#include <numbers>

#include "dephasing/analytic.hpp"
#include "dephasing/errors.hpp"
#include "dephasing/numerics.hpp"
#include "support.hpp"

using namespace dephasing;
using namespace dephasing::analytic;
using testing::rel_err;
using testing::ulp_distance;

namespace {
const BathSpec kOhmic(1, 1, 1);

std::vector<double> log_times(double lo, double hi, std::size_t n) {
    const auto g = TimeGrid::log(lo, hi, n);
    return {g.times().begin(), g.times().end()};
}

std::vector<double> linear_times(double lo, double hi, std::size_t n) {
    const auto g = TimeGrid::linear(lo, hi, n);
    return {g.times().begin(), g.times().end()};
}
}

TEST_CASE("ohmic reference values at t = 1") {
    CHECK(rel_err(gamma_closed(kOhmic, 1), 0.5 * std::numbers::ln2) < 1e-15);
    CHECK(rel_err(phase_integral_closed(kOhmic, 1), std::numbers::pi / 4) < 1e-15);
    CHECK(rel_err(p_x(ModelSpec(kOhmic), 1), std::sqrt(0.5)) < 1e-15);
    CHECK(rel_err(c_x(ModelSpec(kOhmic), 1), 0.5) < 1e-15);
}

// Reference values from a 30-digit evaluation of the defining integrals.
TEST_CASE("non-ohmic reference values") {
    struct Ref {
        double s, t, gamma, phase;
    };
    const Ref refs[] = {
        {0.5, 1, 0.349826073878433344, 1.61325155172314836},
        {0.5, 2, 0.964284550606360634, 2.78683407380164388},
        {2.5, 5, 0.922403233507726122, 0.0679373001301847451},
        {2.5, 10, 0.902747142430795157, 0.0223795707099140205},
    };
    for (const auto& r : refs) {
        CAPTURE(r.s);
        CAPTURE(r.t);
        CHECK(rel_err(gamma_closed(BathSpec(r.s, 1, 1), r.t), r.gamma) < 1e-14);
        CHECK(rel_err(phase_integral_closed(BathSpec(r.s, 1, 1), r.t), r.phase) < 1e-14);
    }
    CHECK(rel_err(gamma_closed(BathSpec(0.3, 1, 1), 1), 0.370704898454330908) < 1e-14);
}

TEST_CASE("everything starts from the uncoupled values at t = 0") {
    testing::Gen gen(21);
    for (int i = 0; i < 200; ++i) {
        const ModelSpec m(BathSpec(gen.exponent(true), gen.uniform(0, 3), gen.log_uniform(0.1, 10)),
                          gen.uniform(-2, 2));
        const auto p = evaluate_point(m, 0.0);
        CHECK(p.gamma == 0.0);
        CHECK(p.phase_integral == 0.0);
        CHECK(p.p_x == 1.0);
        CHECK(p.c_x == 1.0);
        CHECK(p.phi == 1.0);
    }
}

TEST_CASE("long-time limits") {
    CHECK(std::abs(phase_integral_closed(BathSpec(2.5, 1, 1), 1e12)) < 1e-15);
    CHECK(phi_fn(BathSpec(2.5, 1, 1), 1e12) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(phi_fn(BathSpec(1, 2, 1), 1e12) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(rel_err(p_x(ModelSpec(BathSpec(2.5, 1, 1)), 1e16), 0.412208114266963708) < 1e-12);
}

TEST_CASE("gamma is non-negative and P_x never exceeds 1") {
    testing::Gen gen(23);
    for (int i = 0; i < 2000; ++i) {
        const double s = gen.exponent(true);
        const BathSpec bath(s, gen.uniform(0, 3), 1.0);
        const double t = gen.log_uniform(1e-4, 1e8);
        const double g = gamma_closed(bath, t);
        CAPTURE(s);
        CAPTURE(t);
        CHECK(g >= 0.0);
        const double pb = p_x(ModelSpec(bath), t);
        CHECK(pb <= 1.0);
    }
}

TEST_CASE("closed forms scale with B t only") {
    testing::Gen gen(29);
    for (int i = 0; i < 300; ++i) {
        const double s = gen.exponent(true), b = gen.log_uniform(0.01, 100), x = gen.log_uniform(1e-3, 1e4);
        CAPTURE(s);
        CHECK(rel_err(gamma_closed(BathSpec(s, 1, b), x / b), gamma_closed(BathSpec(s, 1, 1), x)) < 1e-12);
    }
}

TEST_CASE("linear in the coupling, exactly") {
    testing::Gen gen(31);
    for (int i = 0; i < 500; ++i) {
        const double s = gen.exponent(true), a = gen.uniform(0.01, 2), t = gen.log_uniform(1e-3, 1e5);
        CHECK(gamma_closed(BathSpec(s, 2 * a, 1), t) == 2 * gamma_closed(BathSpec(s, a, 1), t));
        CHECK(phase_integral_closed(BathSpec(s, 2 * a, 1), t) == 2 * phase_integral_closed(BathSpec(s, a, 1), t));
    }
}

TEST_CASE("limit band around s = 1 joins both branches") {
    for (double a : {0.5, 1.0, 2.0}) {
        for (double x : log_times(1e-2, 1e2, 41)) {
            const double g1 = gamma_closed(BathSpec(1, a, 1), x);
            const double i1 = phase_integral_closed(BathSpec(1, a, 1), x);
            for (double s : {1 - 1e-7, 1 + 1e-7, 1 - 9e-7, 1 + 9e-7}) {
                CAPTURE(s);
                CAPTURE(x);
                CHECK(rel_err(gamma_closed(BathSpec(s, a, 1), x), g1) < 1e-5);
                CHECK(rel_err(phase_integral_closed(BathSpec(s, a, 1), x), i1) < 1e-5);
            }
            // Just outside the band the generic branch takes over without a jump.
            const double inside = gamma_closed(BathSpec(1 + 0.99e-6, a, 1), x);
            const double outside = gamma_closed(BathSpec(1 + 1.01e-6, a, 1), x);
            CHECK(rel_err(inside, outside) < 1e-6);
        }
    }
}

TEST_CASE("odd-coupling identity: C_x(A = 1) equals P_x(A = 2)") {
    const ModelSpec one(BathSpec(1, 1, 1)), two(BathSpec(1, 2, 1));
    for (double t : log_times(1e-3, 1e4, 701)) CHECK(ulp_distance(c_x(one, t), p_x(two, t)) <= 4.0);
    for (double t : linear_times(0, 1, 101)) CHECK(ulp_distance(c_x(one, t), p_x(two, t)) <= 4.0);
}

TEST_CASE("zero bias factorizes C_x = P_x phi exactly") {
    testing::Gen gen(37);
    for (int i = 0; i < 500; ++i) {
        const ModelSpec m(BathSpec(gen.exponent(true), gen.uniform(0, 3), 1.0));
        const auto p = evaluate_point(m, gen.log_uniform(1e-3, 1e5));
        CHECK(p.c_x == p.p_x * p.phi);
    }
}

TEST_CASE("C_x is even in the bias and P_x carries cos(eps t)") {
    testing::Gen gen(41);
    for (int i = 0; i < 300; ++i) {
        const BathSpec bath(gen.exponent(true), gen.uniform(0, 2), 1.0);
        const double eps = gen.uniform(0.01, 3), t = gen.log_uniform(1e-3, 1e3);
        CHECK(c_x(ModelSpec(bath, eps), t) == c_x(ModelSpec(bath, -eps), t));
        CHECK(rel_err(p_x(ModelSpec(bath, eps), t), std::exp(-gamma_closed(bath, t)) * std::cos(eps * t)) < 1e-14);
    }
    // sgn(0) = 0 only removes the sine term, so zero bias is continuous.
    const BathSpec b(1.5, 1, 1);
    CHECK(std::abs(c_x(ModelSpec(b, 1e-12), 2.0) - c_x(ModelSpec(b), 2.0)) < 1e-11);
}

TEST_CASE("decoupled bath leaves only the bias") {
    const ModelSpec m(BathSpec(0.7, 0, 1), 0.9);
    for (double t : {0.1, 1.0, 10.0}) {
        CHECK(p_x(m, t) == std::cos(0.9 * t));
        CHECK(gamma_closed(m.bath(), t) == 0.0);
    }
}

TEST_CASE("closed-form preconditions") {
    CHECK_THROWS_AS(gamma_closed(kOhmic, -1.0), DomainError);
    CHECK_THROWS_AS(phase_integral_closed(kOhmic, std::nan("")), DomainError);
    CHECK_THROWS_AS(gamma_closed(BathSpec(1, 1, 1, 0.5), 1.0), DomainError);
    CHECK_THROWS_AS(p_x(ModelSpec(kOhmic, 0.0, 0.1), 1.0), DomainError);
}

TEST_CASE("time grids") {
    const auto g = TimeGrid::log(1e-2, 1e2, 81);
    CHECK(g[0] == 1e-2);
    CHECK(g[80] == 1e2);
    CHECK(g[40] == 1.0);
    const auto l = TimeGrid::linear(0, 1, 11);
    CHECK(l[0] == 0.0);
    CHECK(l[10] == 1.0);
    CHECK_THROWS_AS(TimeGrid({1.0, 1.0}, Spacing::Linear), DomainError);
    CHECK_THROWS_AS(TimeGrid({0.0, 1.0}, Spacing::Log), DomainError);
    CHECK_THROWS_AS(TimeGrid::log(0.0, 1.0, 5), DomainError);
    CHECK_THROWS_AS(TimeGrid::linear(0.0, 1.0, 1), DomainError);
}

TEST_CASE("series evaluation is aligned with its grid and deterministic") {
    const ModelSpec m(BathSpec(0.5, 1, 1), 0.3);
    const auto grid = TimeGrid::log(1e-3, 1e3, 301);
    const auto a = evaluate_series(m, grid), b = evaluate_series(m, grid);
    REQUIRE(a.points.size() == grid.size());
    CHECK(a.source == Source::ClosedForm);
    CHECK(to_string(a.source) == "closed");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(a.points[i].t == grid[i]);
        CHECK(a.points[i].c_x == b.points[i].c_x);
        CHECK(a.points[i].p_x == p_x(m, grid[i]));
    }
}
