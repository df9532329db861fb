#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dephasing/errors.hpp"
#include "dephasing/numerics.hpp"
#include "support.hpp"

using namespace dephasing;
using namespace dephasing::numerics;
using testing::rel_err;

// Reference values from a 30-digit arbitrary-precision evaluation.
TEST_CASE("gamma matches high-precision references") {
    struct Ref {
        double x, value;
    };
    const Ref refs[] = {
        {1.5, 0.88622692545275801365},     {-0.5, -3.5449077018110320546},
        {0.3, 2.9915689876875906283},      {2.7, 1.544685845850593765},
        {-3.7, 0.25164399590242264351},    {-9.5, 2.7721279115751021321e-6},
        {29.5, 1.6348125198274266444e30},  {0.001, 999.42377248459546611},
        {7.25, 1155.3810139199896872},     {-0.999999, -1000000.4227569912748},
    };
    for (const auto& r : refs) {
        CAPTURE(r.x);
        CHECK(rel_err(gamma_fn(r.x), r.value) < 1e-13);
    }
    CHECK(gamma_fn(1.0) == 1.0);
}

TEST_CASE("gamma at positive integers is the exact factorial") {
    double f = 1.0;
    for (int n = 1; n <= 19; ++n) {
        CHECK(gamma_fn(n) == f);
        f *= n;
    }
}

TEST_CASE("gamma agrees with std::tgamma") {
    testing::Gen gen(3);
    for (int i = 0; i < 2000; ++i) {
        const double x = gen.uniform(-9.5, 29.0);
        if (x < 0.5 && std::abs(x - std::round(x)) < 1e-2) continue;
        CAPTURE(x);
        CHECK(rel_err(gamma_fn(x), std::tgamma(x)) < 1e-13);
    }
}

TEST_CASE("gamma recurrence holds on random points") {
    testing::Gen gen(5);
    int n = 0;
    while (n < 1000) {
        const double x = gen.uniform(-9.5, 29.0);
        if (x < 0.5 && std::abs(x - std::round(x)) < 1e-2) continue;
        CAPTURE(x);
        CHECK(rel_err(x * gamma_fn(x), gamma_fn(x + 1.0)) < 1e-12);
        ++n;
    }
}

TEST_CASE("gamma poles raise a singularity error naming the pole") {
    for (double pole : {0.0, -1.0, -3.0, -17.0}) {
        for (double dx : {0.0, 5e-7, -5e-7}) {
            try {
                gamma_fn(pole + dx);
                FAIL("expected SingularityError");
            } catch (const SingularityError& e) {
                CHECK(e.nearest_pole() == pole);
            }
        }
    }
    CHECK_NOTHROW(gamma_fn(-1.0 + 2e-6));
}

TEST_CASE("sin_pi and cos_pi are exact on the lattice") {
    for (int k = -20; k <= 20; ++k) {
        CHECK(sin_pi(k) == 0.0);
        CHECK(cos_pi(k + 0.5) == 0.0);
        CHECK(std::abs(cos_pi(k)) == 1.0);
    }
    CHECK(sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-16));
    CHECK(sin_pi(1e8 + 0.5) == 1.0);
}

TEST_CASE("stable_log1p_sq") {
    CHECK(stable_log1p_sq(0.0) == 0.0);
    CHECK(stable_log1p_sq(1.0) == doctest::Approx(0.6931471805599453).epsilon(1e-16));
    CHECK(rel_err(stable_log1p_sq(1e-8), 1e-16) < 1e-15);
    CHECK(stable_log1p_sq(1e-200) == 0.0);  // x^2 is below the smallest subnormal
    CHECK(rel_err(stable_log1p_sq(1e200), 400.0 * std::numbers::ln10) < 1e-15);
    CHECK(stable_log1p_sq(-3.0) == stable_log1p_sq(3.0));
}

TEST_CASE("sinc and x/tanh x are continuous through zero") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(x_over_tanh(0.0) == 1.0);
    for (double x : {1e-9, 1e-5, 9e-5, 1.1e-4, 1e-3, 0.5, 3.0}) {
        CAPTURE(x);
        CHECK(rel_err(sinc(x), std::sin(x) / x) < 1e-15);
        CHECK(rel_err(x_over_tanh(x), x / std::tanh(x)) < 1e-14);
    }
}

TEST_CASE("pairwise_sum depends only on input order") {
    std::vector<double> v;
    testing::Gen gen(9);
    for (int i = 0; i < 10001; ++i) v.push_back(gen.uniform(-1, 1) * std::pow(10.0, gen.integer(-8, 8)));
    const double a = pairwise_sum(v), b = pairwise_sum(v);
    CHECK(a == b);
    std::vector<double> ones(1 << 20, 0.1);
    CHECK(rel_err(pairwise_sum(ones), 0.1 * (1 << 20)) < 1e-14);
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("semi-infinite quadrature reference integrals") {
    CHECK(rel_err(integrate_semi_infinite([](double w) { return std::exp(-w); }).value, 1.0) < 1e-12);
    CHECK(rel_err(integrate_semi_infinite([](double w) { return w * std::exp(-w); }).value, 1.0) < 1e-12);
    const auto r = integrate_semi_infinite([](double w) { return std::exp(-w) / std::sqrt(w); });
    CHECK(rel_err(r.value, 1.7724538509055160273) < 1e-10);
    CHECK(r.error <= 1e-10 * r.value);
}

TEST_CASE("quadrature reproduces the gamma integral family") {
    testing::Gen gen(13);
    for (int i = 0; i < 60; ++i) {
        const double a = gen.uniform(0.2, 6.0);
        const double scale = gen.log_uniform(0.1, 10.0);
        CAPTURE(a);
        CAPTURE(scale);
        IntegrandShape shape;
        shape.scale = scale;
        // integral of w^(a-1) exp(-w/scale) = scale^a Gamma(a)
        const auto r = integrate_semi_infinite(
            [&](double w) { return std::pow(w, a - 1) * std::exp(-w / scale); }, {}, shape);
        CHECK(rel_err(r.value, std::pow(scale, a) * gamma_fn(a)) < 1e-9);
    }
}

TEST_CASE("quadrature handles oscillatory integrands with panel limits") {
    for (double t : {1.0, 20.0, 300.0}) {
        IntegrandShape shape;
        shape.max_panel_width = std::numbers::pi / t;
        const auto r = integrate_semi_infinite([t](double w) { return std::exp(-w) * std::cos(w * t); }, {}, shape);
        CAPTURE(t);
        CHECK(std::abs(r.value - 1.0 / (1.0 + t * t)) < 1e-11);
    }
}

TEST_CASE("quadrature gives up with the best estimate attached") {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 2;
    cfg.rel_tol = 1e-14;
    cfg.abs_tol = 1e-300;
    try {
        integrate_semi_infinite([](double w) { return std::exp(-w) * std::cos(40 * w) * std::log(w); }, cfg);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.error_bound() > 0.0);
    }
}

TEST_CASE("quadrature config validation") {
    QuadratureConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.rel_tol = 0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate_semi_infinite([](double w) { return std::exp(-w); }, cfg), DomainError);
}
