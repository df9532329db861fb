#include "dephasing/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "dephasing/errors.hpp"

namespace dephasing::numerics {

namespace {

constexpr double kPi = std::numbers::pi;

// Reduces x to r in [-1, 1] with x = r + 2n; exact for every finite double.
double reduce_mod2(double x) noexcept {
    if (std::abs(x) >= 0x1p52) return 0.0;  // every such double is an even integer
    return x - 2.0 * std::nearbyint(0.5 * x);
}

}  // namespace

double sin_pi(double x) noexcept {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = reduce_mod2(x);
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    if (r == 0.0) return 0.0;
    return std::sin(kPi * r);
}

double cos_pi(double x) noexcept {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    const double r = std::abs(reduce_mod2(x));  // cos is even
    if (r <= 0.25) return std::cos(kPi * r);
    if (r == 0.5) return 0.0;
    // cos(pi r) = sin(pi (1/2 - r)); the subtraction is exact for r in [1/4, 1].
    return std::sin(kPi * (0.5 - r));
}

namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

double lanczos_gamma(double x) noexcept {
    // x >= 0.5
    const double z = x - 1.0;
    double series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
    const double t = z + kLanczosG + 0.5;
    // t^(z+1/2) e^-t split in two halves so the power does not overflow before Gamma does.
    const double half_power = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * kPi) * half_power * (half_power * std::exp(-t)) * series;
}

}  // namespace

double gamma_fn(double x) {
    if (std::isnan(x)) throw DomainError("gamma_fn: NaN argument");
    const double nearest = std::nearbyint(x);
    if (nearest <= 0.0 && std::abs(x - nearest) < kPoleExclusion) {
        throw SingularityError("gamma_fn: argument " + std::to_string(x) +
                                   " is within the exclusion band of the pole at " +
                                   std::to_string(nearest),
                               nearest);
    }
    if (x == nearest && x >= 1.0 && x <= 19.0) {
        double fact = 1.0;  // (n-1)! < 2^53, exact
        for (int k = 2; k < static_cast<int>(x); ++k) fact *= k;
        return fact;
    }
    if (x < 0.5) return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
    return lanczos_gamma(x);
}

double stable_log1p_sq(double x) noexcept {
    const double ax = std::abs(x);
    if (ax > 1e150) return 2.0 * std::log(ax) + std::log1p(1.0 / ax / ax);
    return std::log1p(ax * ax);
}

double sinc(double x) noexcept {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

double x_over_tanh(double x) noexcept {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 3.0 * (1.0 - x2 / 15.0);
    }
    if (ax > 20.0) return ax;  // tanh saturates to 1 in double precision
    return x / std::tanh(x);
}

double pairwise_sum(std::span<const double> values) noexcept {
    if (values.empty()) return 0.0;
    if (values.size() <= 8) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw DomainError("QuadratureConfig: tolerances must be > 0");
    if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

enum class PanelKind { Origin, Interior, Tail };

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
    PanelKind kind;
};

struct WorseFirst {
    bool operator()(const Panel& a, const Panel& b) const noexcept { return a.error < b.error; }
};

class Integrator {
public:
    Integrator(const std::function<double(double)>& f, const QuadratureConfig& cfg,
               const IntegrandShape& shape)
        : f_(f), cfg_(cfg), shape_(shape), split_(shape.split_factor * shape.scale) {}

    Panel evaluate(double lo, double hi, PanelKind kind) {
        switch (kind) {
            case PanelKind::Origin: return tanh_sinh(lo, hi);
            case PanelKind::Interior: return kronrod(lo, hi, kind, [this](double w) { return eval(w); });
            case PanelKind::Tail:
                return kronrod(lo, hi, kind, [this](double u) {
                    const double one_minus = 1.0 - u;
                    const double w = split_ + shape_.scale * u / one_minus;
                    return eval(w) * shape_.scale / (one_minus * one_minus);
                });
        }
        return {};
    }

    std::size_t evaluations() const noexcept { return evaluations_; }
    double split() const noexcept { return split_; }

private:
    double eval(double w) {
        ++evaluations_;
        const double v = f_(w);
        return std::isfinite(v) ? v : 0.0;
    }

    template <typename G>
    Panel kronrod(double lo, double hi, PanelKind kind, G&& g) {
        const double centre = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        const double fc = g(centre);
        double kronrod_sum = fc * kKronrodWeights[7];
        double gauss_sum = fc * kGaussWeights[3];
        for (std::size_t j = 0; j < 7; ++j) {
            const double dx = half * kKronrodNodes[j];
            const double pair = g(centre - dx) + g(centre + dx);
            kronrod_sum += kKronrodWeights[j] * pair;
            if (j % 2 == 1) gauss_sum += kGaussWeights[j / 2] * pair;
        }
        const double value = kronrod_sum * half;
        const double error = std::abs((kronrod_sum - gauss_sum) * half);
        return {lo, hi, value, error, kind};
    }

    // Tanh-sinh on [lo, hi], lo being the (possibly singular) origin.
    Panel tanh_sinh(double lo, double hi) {
        const double width = hi - lo;
        constexpr double kEdge = 5.0;  // nodes reach ~1e-101 * width from the endpoints
        auto term = [&](double v) {
            const double z = kPi * std::sinh(v);
            const double left = 1.0 / (1.0 + std::exp(-z));  // sigma(z), distance fraction from lo
            const double right = 1.0 / (1.0 + std::exp(z));  // 1 - sigma(z)
            const double w = lo + width * left;
            const double jac = width * left * right * kPi * std::cosh(v);
            if (jac == 0.0) return 0.0;
            return eval(w) * jac;
        };
        double h = 1.0;
        double sum = term(0.0);
        for (double v = h; v <= kEdge; v += h) sum += term(v) + term(-v);
        double estimate = sum * h;
        double error = std::abs(estimate);
        for (int level = 1; level <= 10; ++level) {
            h *= 0.5;
            double fresh = 0.0;
            for (double v = h; v <= kEdge; v += 2.0 * h) fresh += term(v) + term(-v);
            sum += fresh;
            const double next = sum * h;
            error = std::abs(next - estimate);
            estimate = next;
            const double target = 0.25 * std::max(cfg_.abs_tol, cfg_.rel_tol * std::abs(estimate));
            if (level >= 3 && error <= target) break;
        }
        return {lo, hi, estimate, error, PanelKind::Origin};
    }

    const std::function<double(double)>& f_;
    QuadratureConfig cfg_;
    IntegrandShape shape_;
    double split_;
    std::size_t evaluations_ = 0;
};

}  // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureConfig& cfg, const IntegrandShape& shape) {
    cfg.validate();
    if (!(shape.scale > 0.0) || !std::isfinite(shape.scale))
        throw DomainError("integrate_semi_infinite: scale must be finite and > 0");
    if (!(shape.split_factor > 0.0)) throw DomainError("integrate_semi_infinite: split_factor must be > 0");
    if (!(shape.max_panel_width > 0.0)) throw DomainError("integrate_semi_infinite: max_panel_width must be > 0");

    Integrator integ(f, cfg, shape);
    const double split = integ.split();
    const double width = std::min(shape.max_panel_width, shape.scale);

    std::priority_queue<Panel, std::vector<Panel>, WorseFirst> heap;
    const double first_hi = std::min(width, split);
    heap.push(integ.evaluate(0.0, first_hi, PanelKind::Origin));
    if (split > first_hi) {
        const auto count = static_cast<std::size_t>(std::ceil((split - first_hi) / width));
        const double step = (split - first_hi) / static_cast<double>(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double lo = first_hi + step * static_cast<double>(i);
            const double hi = (i + 1 == count) ? split : first_hi + step * static_cast<double>(i + 1);
            heap.push(integ.evaluate(lo, hi, PanelKind::Interior));
        }
    }
    heap.push(integ.evaluate(0.0, 1.0, PanelKind::Tail));

    auto totals = [&heap]() {
        // Copy out in heap order is not deterministic across bisection histories;
        // sort by position so the final sum is reproducible.
        std::vector<Panel> panels;
        auto copy = heap;
        panels.reserve(copy.size());
        while (!copy.empty()) {
            panels.push_back(copy.top());
            copy.pop();
        }
        std::sort(panels.begin(), panels.end(), [](const Panel& a, const Panel& b) {
            if (a.kind != b.kind) return a.kind < b.kind;
            return a.lo < b.lo;
        });
        std::vector<double> values;
        values.reserve(panels.size());
        double err = 0.0;
        for (const auto& p : panels) {
            values.push_back(p.value);
            err += p.error;
        }
        return std::pair{pairwise_sum(values), err};
    };

    // Running sums drive the loop; the final answer is re-summed in fixed order.
    double value = 0.0;
    double error = 0.0;
    {
        auto [v, e] = totals();
        value = v;
        error = e;
    }
    std::size_t subdivisions = 0;
    while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
        if (subdivisions >= cfg.max_subdivisions) {
            throw ConvergenceError("integrate_semi_infinite: no convergence after " +
                                       std::to_string(subdivisions) + " subdivisions (estimate " +
                                       std::to_string(value) + ", error " + std::to_string(error) + ")",
                                   value, error);
        }
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const PanelKind right_kind = worst.kind == PanelKind::Origin ? PanelKind::Interior : worst.kind;
        const Panel left = integ.evaluate(worst.lo, mid, worst.kind);
        const Panel right = integ.evaluate(mid, worst.hi, right_kind);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
        if (subdivisions % 64 == 0) {
            auto [v, e] = totals();
            value = v;
            error = e;
        }
    }
    auto [v, e] = totals();
    return {v, e, integ.evaluations(), subdivisions};
}

}  // namespace dephasing::numerics
