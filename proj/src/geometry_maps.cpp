#include "zetavol/geometry_maps.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace zetavol {

namespace {

constexpr double kMinCos = 1e-12;

void check_point(BkcVariant variant, std::span<const double> point) {
    if (point.size() < 2) throw std::invalid_argument("map dimension must be >= 2");
    for (double c : point) {
        if (!std::isfinite(c)) throw DomainError("non-finite coordinate");
        if (variant == BkcVariant::Trig && (c < 0.0 || c >= 0.5 * std::numbers::pi))
            throw DomainError("trig map needs components in [0, pi/2)");
        if (variant == BkcVariant::Hyperbolic && c < 0.0)
            throw DomainError("hyperbolic map needs nonnegative components");
    }
}

// Map without the range checks, so finite differences may step just across
// the u_i = 0 faces.
std::vector<double> raw_map(BkcVariant variant, std::span<const double> u) {
    const std::size_t n = u.size();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double next = u[(i + 1) % n];
        if (variant == BkcVariant::Trig) {
            const double c = std::cos(next);
            if (c <= kMinCos) throw DomainError("denominator cosine vanishes");
            x[i] = std::sin(u[i]) / c;
        } else {
            x[i] = std::sinh(u[i]) / std::cosh(next);
        }
    }
    return x;
}

}  // namespace

std::string to_string(BkcVariant variant) { return variant == BkcVariant::Trig ? "TRIG" : "HYPERBOLIC"; }

std::vector<double> bkc_map(BkcVariant variant, std::span<const double> point) {
    check_point(variant, point);
    return raw_map(variant, point);
}

double bkc_jacobian_formula(BkcVariant variant, std::span<const double> point) {
    const std::vector<double> x = bkc_map(variant, point);
    double prod = 1.0;
    for (double xi : x) prod *= xi * xi;
    if (variant == BkcVariant::Trig && x.size() % 2 == 1) return 1.0 + prod;
    return 1.0 - prod;
}

double numeric_jacobian_determinant(BkcVariant variant, std::span<const double> point, double h) {
    check_point(variant, point);
    const auto n = static_cast<Eigen::Index>(point.size());
    Eigen::MatrixXd jac(n, n);
    std::vector<double> shifted(point.begin(), point.end());
    for (Eigen::Index j = 0; j < n; ++j) {
        const double orig = shifted[j];
        shifted[j] = orig + h;
        const std::vector<double> plus = raw_map(variant, shifted);
        shifted[j] = orig - h;
        const std::vector<double> minus = raw_map(variant, shifted);
        shifted[j] = orig;
        for (Eigen::Index i = 0; i < n; ++i) jac(i, j) = (plus[i] - minus[i]) / (2.0 * h);
    }
    return jac.partialPivLu().determinant();
}

double jacobian_check(BkcVariant variant, std::span<const double> point, double h) {
    if (!(h >= 1e-6 && h <= 1e-4)) throw std::invalid_argument("finite-difference step must lie in [1e-6, 1e-4]");
    return std::abs(numeric_jacobian_determinant(variant, point, h) - bkc_jacobian_formula(variant, point));
}

AmoebaWitness amoeba_witness(double u, double v) {
    if (!std::isfinite(u) || !std::isfinite(v)) throw DomainError("non-finite amoeba point");
    const double cu = std::cosh(u), cv = std::cosh(v);
    const double x = std::sinh(v) / cu;
    const double y = std::sinh(u) / cv;
    if (!(std::abs(x) < 1.0 && std::abs(y) < 1.0)) throw DomainError("point is not strictly inside the amoeba");

    // P = 0 splits into sin phi_u = x cos phi_v and sin phi_v = y cos phi_u.
    const double denom = 1.0 - x * x * y * y;
    const double cos_u = std::sqrt((1.0 - x * x) / denom);
    const double cos_v = std::sqrt((1.0 - y * y) / denom);
    AmoebaWitness w;
    w.phi_u = std::atan2(x * cos_v, cos_u);
    w.phi_v = std::atan2(y * cos_u, cos_v);

    using namespace std::complex_literals;
    const std::complex<double> z1 = std::polar(std::exp(u), w.phi_u);
    const std::complex<double> z2 = std::polar(std::exp(v), -w.phi_v);
    w.residual = std::abs(z1 - 1.0 / z1 - 1i * (z2 - 1.0 / z2));
    return w;
}

}  // namespace zetavol
