#include "zetavol/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace zetavol::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr unsigned kGaussPoints = 20;
// Beyond |t| = 4 the tanh-sinh weights are below 1e-35 relative to the centre.
constexpr double kTanhSinhRange = 4.0;

double noise_floor(double abs_sum) { return 16.0 * kEps * abs_sum; }

}  // namespace

GaussRule gauss_legendre_rule(unsigned points) {
    if (points == 0) throw std::invalid_argument("gauss_legendre_rule: need at least one point");
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    const double n = points;
    for (unsigned i = 0; i < (points + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (unsigned k = 2; k <= points; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[points - 1 - i] = x;
        rule.weights[i] = rule.weights[points - 1 - i] = w;
    }
    if (points % 2 == 1) rule.nodes[points / 2] = 0.0;
    return rule;
}

Result gauss_legendre(const std::function<double(double)>& f, double a, double b, double tol, int max_refinements) {
    static const GaussRule rule = gauss_legendre_rule(kGaussPoints);
    Result r;
    double previous = 0.0;
    for (int level = 0; level <= max_refinements; ++level) {
        const std::size_t panels = std::size_t{1} << level;
        const double width = (b - a) / static_cast<double>(panels);
        double sum = 0.0, abs_sum = 0.0;
        for (std::size_t p = 0; p < panels; ++p) {
            const double mid = a + (static_cast<double>(p) + 0.5) * width;
            double panel = 0.0;
            for (unsigned i = 0; i < kGaussPoints; ++i) {
                const double term = rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
                panel += term;
                abs_sum += std::abs(term);
            }
            sum += 0.5 * width * panel;
        }
        r.value = sum;
        r.rounding = noise_floor(0.5 * width * abs_sum);
        r.refinements = level;
        if (level > 0) {
            r.delta = std::abs(sum - previous);
            if (2.0 * std::max(r.delta, r.rounding) <= tol) {
                r.converged = true;
                return r;
            }
        }
        previous = sum;
    }
    return r;
}

Result tanh_sinh(const EndpointAwareFn& f, double a, double b, double tol, int max_refinements) {
    const double half = 0.5 * (b - a);
    double abs_total = 0.0;
    // Sum of w(t) f(x(t)) over the given abscissae t = k h.
    auto accumulate = [&](double h, long first, long stride) {
        double sum = 0.0;
        const long last = static_cast<long>(std::ceil(kTanhSinhRange / h));
        for (long k = first; k <= last; k += stride) {
            for (const int sign : {-1, 1}) {
                if (k == 0 && sign == 1) continue;
                const double t = sign * k * h;
                const double s = 0.5 * std::numbers::pi * std::sinh(t);
                const double cs = std::cosh(s);
                const double w = 0.5 * std::numbers::pi * std::cosh(t) / (cs * cs);
                const double from_a = half * 2.0 / (std::exp(-2.0 * s) + 1.0);
                const double to_b = half * 2.0 / (std::exp(2.0 * s) + 1.0);
                if (from_a <= 0.0 || to_b <= 0.0) continue;
                const double x = t < 0 ? a + from_a : b - to_b;
                const double term = w * f(x, from_a, to_b);
                sum += term;
                abs_total += std::abs(term);
            }
        }
        return sum;
    };

    Result r;
    double h = 1.0;
    double raw = accumulate(h, 0, 1);  // sum over all k h
    double estimate = half * h * raw;
    for (int level = 1; level <= max_refinements; ++level) {
        h *= 0.5;
        raw += accumulate(h, 1, 2);  // odd multiples of the new step
        const double next = half * h * raw;
        r.value = next;
        r.delta = std::abs(next - estimate);
        r.rounding = noise_floor(half * h * abs_total);
        r.refinements = level;
        if (level >= 3 && 2.0 * std::max(r.delta, r.rounding) <= tol) {
            r.converged = true;
            return r;
        }
        estimate = next;
    }
    return r;
}

}  // namespace zetavol::quad
