#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "zetavol/geometry_maps.hpp"

using namespace zetavol;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("map values") {
    const auto t = bkc_map(BkcVariant::Trig, std::vector{kPi / 6, kPi / 6});
    CHECK(t[0] == doctest::Approx(std::tan(kPi / 6)));
    CHECK(t[1] == doctest::Approx(std::tan(kPi / 6)));
    const auto corner = bkc_map(BkcVariant::Trig, std::vector{kPi / 4, kPi / 4});
    CHECK(corner[0] == doctest::Approx(1.0));
    const auto origin = bkc_map(BkcVariant::Hyperbolic, std::vector{0.0, 0.0, 0.0, 0.0});
    for (double x : origin) CHECK(x == 0.0);
}

TEST_CASE("map domain errors") {
    CHECK_THROWS_AS(bkc_map(BkcVariant::Trig, std::vector{0.1, kPi / 2}), DomainError);
    CHECK_THROWS_AS(bkc_map(BkcVariant::Trig, std::vector{-0.1, 0.2}), DomainError);
    CHECK_THROWS_AS(bkc_map(BkcVariant::Hyperbolic, std::vector{-0.1, 0.2}), DomainError);
    CHECK_THROWS_AS(bkc_map(BkcVariant::Trig, std::vector{0.1}), std::invalid_argument);
    CHECK_THROWS_AS(jacobian_check(BkcVariant::Trig, std::vector{0.1, kPi / 2 - 1e-13}, 1e-5), DomainError);
    CHECK_THROWS_AS(jacobian_check(BkcVariant::Trig, std::vector{0.3, 0.4}, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(jacobian_check(BkcVariant::Trig, std::vector{0.3, 0.4}, 1e-7), std::invalid_argument);
}

TEST_CASE("Jacobian determinants") {
    CHECK(jacobian_check(BkcVariant::Trig, std::vector{0.3, 0.4}, 1e-5) <= 1e-6);
    const std::vector p3{0.2, 0.3, 0.4};
    const auto x = bkc_map(BkcVariant::Trig, p3);
    CHECK(bkc_jacobian_formula(BkcVariant::Trig, p3) == doctest::Approx(1.0 + x[0] * x[0] * x[1] * x[1] * x[2] * x[2]));
    CHECK(jacobian_check(BkcVariant::Trig, p3, 1e-5) <= 1e-6);
    CHECK(jacobian_check(BkcVariant::Hyperbolic, std::vector{0.5, 0.5, 0.5}, 1e-5) <= 1e-6);
}

TEST_CASE("triangle maps into the unit square") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(0.0, kPi / 2);
    int mapped = 0;
    while (mapped < 10'000) {
        const double u = d(rng), v = d(rng);
        if (u + v >= kPi / 2 || u == 0.0 || v == 0.0) continue;
        const auto x = bkc_map(BkcVariant::Trig, std::vector{u, v});
        CHECK((x[0] > 0.0 && x[0] < 1.0 && x[1] > 0.0 && x[1] < 1.0));
        CHECK(x[0] * x[1] < 1.0);
        ++mapped;
    }
}

TEST_CASE("amoeba witness") {
    const AmoebaWitness w0 = amoeba_witness(0.0, 0.0);
    CHECK(w0.phi_u == 0.0);
    CHECK(w0.phi_v == 0.0);
    CHECK(w0.residual == 0.0);
    CHECK(amoeba_witness(1.0, 1.0).residual <= 1e-9);
    CHECK(amoeba_witness(0.5, 0.8).residual <= 1e-9);
    CHECK(amoeba_witness(-2.0, -2.0).residual <= 1e-9);
    CHECK(amoeba_witness(9.0, 9.0).residual <= 1e-9);
    // sinh 1.2 > cosh 0.5: outside
    CHECK_THROWS_AS(amoeba_witness(0.5, 1.2), DomainError);
    CHECK_THROWS_AS(amoeba_witness(5.0, 0.0), DomainError);
    // boundary point sinh u = cosh v is excluded
    CHECK_THROWS_AS(amoeba_witness(std::asinh(1.0), 0.0), DomainError);
}
