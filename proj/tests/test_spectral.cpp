#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "dephasing/errors.hpp"
#include "dephasing/spectral.hpp"
#include "support.hpp"

using namespace dephasing;

TEST_CASE("spectral density reference values") {
    CHECK(spectral_density(BathSpec(1, 1, 1), 0.0) == 0.0);
    CHECK(spectral_density(BathSpec(1, 1, 1), 1.0) == doctest::Approx(1.1557273497909217179).epsilon(1e-15));
    CHECK(spectral_density(BathSpec(0.5, 2, 2), 2.0) == doctest::Approx(4.6229093991636868716).epsilon(1e-15));
    CHECK(spectral_density(BathSpec(1, 0, 1), 3.0) == 0.0);
}

TEST_CASE("spectral density rejects negative frequency") {
    CHECK_THROWS_AS(spectral_density(BathSpec(1, 1, 1), -1e-12), DomainError);
    CHECK_THROWS_AS(spectral_density(BathSpec(1, 1, 1), std::nan("")), DomainError);
}

TEST_CASE("spectral density is non-negative and vanishes past the cutoff") {
    testing::Gen gen(11);
    for (int i = 0; i < 500; ++i) {
        const BathSpec bath(gen.exponent(true), gen.uniform(0, 3), gen.log_uniform(1e-2, 1e2));
        const double w = gen.log_uniform(1e-6, 1e3) * bath.cutoff();
        CHECK(spectral_density(bath, w) >= 0.0);
    }
    CHECK(spectral_density(BathSpec(3, 1, 1), 1e3) < 1e-300);
    CHECK(spectral_density(BathSpec(3, 1, 1), 1e6) == 0.0);
}

TEST_CASE("bath classification") {
    CHECK(classify_bath(BathSpec(0.5, 1, 1)) == BathKind::SubOhmic);
    CHECK(classify_bath(BathSpec(1.0, 1, 1)) == BathKind::Ohmic);
    CHECK(classify_bath(BathSpec(2.5, 1, 1)) == BathKind::SuperOhmic);
    CHECK(to_string(BathKind::Ohmic) == "Ohmic");
}

TEST_CASE("bath invariants are enforced on construction") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(BathSpec(0.0, 1, 1), DomainError);
    CHECK_THROWS_AS(BathSpec(-1.0, 1, 1), DomainError);
    CHECK_THROWS_AS(BathSpec(nan, 1, 1), DomainError);
    CHECK_THROWS_AS(BathSpec(1, -0.1, 1), DomainError);
    CHECK_THROWS_AS(BathSpec(1, inf, 1), DomainError);
    CHECK_THROWS_AS(BathSpec(1, 1, 0), DomainError);
    CHECK_THROWS_AS(BathSpec(1, 1, 1, -0.5), DomainError);
    CHECK_NOTHROW(BathSpec(1, 0, 1, 0));
    CHECK_THROWS_AS(ModelSpec(BathSpec(1, 1, 1), 0.0, -1.0), DomainError);
    CHECK_THROWS_AS(ModelSpec(BathSpec(1, 1, 1), nan), DomainError);
}

TEST_CASE("copy-with helpers keep the other fields") {
    const BathSpec b(1.5, 2, 3, 0.25);
    CHECK(b.with_coupling(4) == BathSpec(1.5, 4, 3, 0.25));
    CHECK(b.with_cutoff(5) == BathSpec(1.5, 2, 5, 0.25));
    CHECK(b.with_non_hermiticity(0).is_hermitian());
    CHECK_THROWS_AS(b.with_cutoff(-1), DomainError);
    const ModelSpec m(b, 0.5, 0.1);
    CHECK(m.with_bias(1.0).temperature() == 0.1);
    CHECK(m.with_bath(BathSpec(1, 1, 1)).bias() == 0.5);
}
