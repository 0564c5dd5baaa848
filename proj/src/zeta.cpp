#include "zetavol/zeta.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "zetavol/kernel.hpp"
#include "zetavol/quadrature.hpp"

namespace zetavol {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr int kRefinementBudget = 10;
// Largest partial-sum length used by the series oracle.
constexpr double kMaxSeriesTerms = 4.0e9;

void require_order(unsigned n, const char* who) {
    if (n == 0) throw std::invalid_argument(std::string(who) + ": order n must be >= 1");
}

void require_tolerance(double tol, const char* who) {
    if (!(tol > 0.0)) throw std::invalid_argument(std::string(who) + ": tolerance must be positive");
}

double pi_to(unsigned k) {
    double p = 1.0;
    for (unsigned i = 0; i < k; ++i) p *= kPi;
    return p;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Scales a quadrature result into a ZetaValue and enforces the tolerance.
ZetaValue finish_numeric(const quad::Result& q, double scale, double tol, std::string method) {
    if (!q.converged)
        throw ToleranceNotMet(method + ": tolerance " + sci(tol) + " not met after " +
                              std::to_string(q.refinements) + " refinements (last delta " + sci(q.delta) +
                              ", rounding floor " + sci(q.rounding) + ")");
    ZetaValue z;
    z.kind = ZetaKind::Numeric;
    z.value = scale * q.value;
    z.error_bound = std::abs(scale) * 2.0 * std::max(q.delta, q.rounding) + 64.0 * kEps * std::abs(z.value);
    z.method = std::move(method);
    if (z.error_bound > tol)
        throw ToleranceNotMet(z.method + ": error bound " + sci(z.error_bound) + " exceeds tolerance " +
                              sci(tol));
    return z;
}

}  // namespace

std::string to_string(ZetaKind kind) { return kind == ZetaKind::ExactPiPower ? "EXACT_PI_POWER" : "NUMERIC"; }

ZetaValue ZetaValue::exact(Rational coefficient, unsigned power, std::string method) {
    ZetaValue z;
    z.kind = ZetaKind::ExactPiPower;
    z.coefficient = std::move(coefficient);
    z.pi_power = power;
    z.value = z.coefficient.to_double() * pi_to(power);
    // One ulp for the coefficient, one rounding per multiplication and per
    // factor of the rounded constant pi.
    z.error_bound = static_cast<double>(power + 2) * kEps * std::abs(z.value);
    z.method = std::move(method);
    return z;
}

ZetaValue zeta_even_trace(unsigned n) {
    require_order(n, "zeta_even_trace");
    const Rational trace = kernel_trace(recurrence_kernel(2 * n));
    const Rational four_n = pow2(static_cast<int>(2 * n));
    // 2^{2n}/(2^{2n}-1) * (1/2)^{2n} * trace
    return ZetaValue::exact(trace / (four_n - Rational(1)), 2 * n, "trace");
}

ZetaValue zeta_even_bernoulli(unsigned n, const BernoulliTable& bernoulli) {
    require_order(n, "zeta_even_bernoulli");
    const Rational c = sign_power(n + 1) * pow2(static_cast<int>(2 * n) - 1) / factorial(2 * n) * bernoulli(2 * n);
    return ZetaValue::exact(c, 2 * n, "bernoulli");
}

double euler_cosecant_integrand(unsigned n, double u) {
    require_order(n, "euler_cosecant_integrand");
    const UniPoly& e = euler_polynomial(2 * n);
    // E_{2n}(u) ~ 2n E_{2n-1}(0) u near 0 and E_{2n}(1 - u) = E_{2n}(u).
    if (u == 0.0 || u == 1.0)
        return static_cast<double>(2 * n) * euler_polynomial(2 * n - 1)(Rational(0)).to_double() / kPi;
    const double w = std::min(u, 1.0 - u);
    return e.eval(w) / std::sin(kPi * w);
}

ZetaValue zeta_odd_euler_integral(unsigned n, double tol) {
    require_order(n, "zeta_odd_euler_integral");
    require_tolerance(tol, "zeta_odd_euler_integral");
    const std::vector<double> coeffs = euler_polynomial(2 * n).to_doubles();
    const double prefactor = (n % 2 == 0 ? 1.0 : -1.0) * pi_to(2 * n + 1) /
                             (4.0 * (1.0 - std::ldexp(1.0, -static_cast<int>(2 * n + 1))) *
                              factorial(2 * n).to_double());
    // The integrand is symmetric about 1/2; integrate the half where sin(pi u)
    // is computed without cancellation.
    const double scale = 2.0 * prefactor;
    const quad::Result q = quad::gauss_legendre(
        [&](double u) { return horner(coeffs, u) / std::sin(kPi * u); }, 0.0, 0.5, 0.25 * tol / std::abs(scale),
        kRefinementBudget);
    return finish_numeric(q, scale, tol, "euler-integral");
}

ZetaValue zeta3_cosecant(double tol) {
    require_tolerance(tol, "zeta3_cosecant");
    const double scale = 2.0 / 7.0;
    const quad::Result q = quad::gauss_legendre([](double x) { return x * (kPi - x) / std::sin(x); }, 0.0, 0.5 * kPi,
                                                0.25 * tol / scale, kRefinementBudget);
    return finish_numeric(q, scale, tol, "cosecant");
}

ZetaValue zeta_odd_logtan(unsigned n, double tol) {
    require_order(n, "zeta_odd_logtan");
    require_tolerance(tol, "zeta_odd_logtan");
    const std::vector<double> diag = kernel_diagonal(recurrence_kernel(2 * n)).poly.to_doubles();
    const double scale = -2.0 * pi_to(2 * n) / (std::ldexp(1.0, static_cast<int>(2 * n + 1)) - 1.0);
    // ln tan(pi u / 2) = ln sin(pi u / 2) - ln sin(pi (1 - u) / 2), with 1 - u
    // supplied exactly by the quadrature.
    const quad::Result q = quad::tanh_sinh(
        [&](double u, double from0, double to1) {
            const double log_tan = std::log(std::sin(0.5 * kPi * from0)) - std::log(std::sin(0.5 * kPi * to1));
            return log_tan * horner(diag, u);
        },
        0.0, 1.0, 0.25 * tol / std::abs(scale), kRefinementBudget);
    return finish_numeric(q, scale, tol, "log-tan");
}

ZetaValue zeta_series(double s, double eps) {
    if (!(s > 1.0)) throw std::invalid_argument("zeta_series: s must exceed 1");
    require_tolerance(eps, "zeta_series");
    // The tail lies in [(N+1)^{1-s}, N^{1-s}]/(s-1); that bracket is narrower
    // than N^{-s}, so N >= eps^{-1/s} keeps the half-width below eps/2.
    const double wanted = std::ceil(std::pow(eps, -1.0 / s));
    const auto terms = static_cast<unsigned long long>(std::min(std::max(wanted, 1.0), kMaxSeriesTerms));

    // Neumaier-compensated sum, smallest terms first.
    double sum = 0.0, carry = 0.0;
    for (unsigned long long k = terms; k >= 1; --k) {
        const double term = std::pow(static_cast<double>(k), -s);
        const double t = sum + term;
        carry += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    const double big_n = static_cast<double>(terms);
    const double tail = 0.5 * (std::pow(big_n, 1.0 - s) + std::pow(big_n + 1.0, 1.0 - s)) / (s - 1.0);
    const double half_width = 0.5 * std::pow(big_n, -s);

    ZetaValue z;
    z.kind = ZetaKind::Numeric;
    z.value = sum + carry + tail;
    z.error_bound = half_width + 8.0 * kEps * z.value;
    z.method = "series";
    return z;
}

nlohmann::json to_json(const ZetaValue& z) {
    nlohmann::json j;
    j["kind"] = to_string(z.kind);
    if (z.kind == ZetaKind::ExactPiPower) {
        j["coefficient"] = z.coefficient.str();
        j["pi_power"] = z.pi_power;
    } else {
        j["coefficient"] = nullptr;
        j["pi_power"] = nullptr;
    }
    j["value"] = z.value;
    j["error_bound"] = z.error_bound;
    j["method"] = z.method;
    return j;
}

}  // namespace zetavol
