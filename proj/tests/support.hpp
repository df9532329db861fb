// Shared helpers for the unit tests: a seeded generator and a few error measures.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace testing {

// Seeded, so every property test replays the same cases.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // Bath exponent in (0, 4], kept clear of s = 1 unless allow_ohmic.
    double exponent(bool allow_ohmic = false) {
        for (;;) {
            const double s = uniform(0.05, 4.0);
            if (allow_ohmic || std::abs(s - 1.0) > 1e-3) return s;
        }
    }

private:
    std::mt19937_64 rng_;
};

inline double rel_err(double got, double want) {
    if (got == want) return 0.0;
    return std::abs(got - want) / std::abs(want);
}

inline double ulp_distance(double a, double b) {
    if (a == b) return 0.0;
    const double m = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) / (std::nextafter(m, std::numeric_limits<double>::infinity()) - m);
}

}  // namespace testing
