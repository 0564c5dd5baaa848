// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "json.hpp"
#include "zetavol/geometry_maps.hpp"
#include "zetavol/kernel.hpp"
#include "zetavol/montecarlo.hpp"
#include "zetavol/special_sequences.hpp"
#include "zetavol/zeta.hpp"

using namespace zetavol;

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s %s%s%s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.empty() ? "" : " : ",
                o.detail.c_str());
    std::fflush(stdout);
}

std::string g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

Outcome ac1() {
    Outcome o;
    const auto t0 = Clock::now();
    // Fresh chain, independent of the memoized kernels.
    PiecewiseKernel k = kernel_base();
    for (unsigned order = 2; order <= 12; ++order) {
        k = kernel_step(k);
        const std::string diff = describe_kernel_mismatch(k, kernel_closed_form(order));
        if (!diff.empty()) o.fail("order " + std::to_string(order) + ": " + diff);
    }
    const double t = seconds_since(t0);
    if (t >= 10.0) o.fail("runtime " + g(t) + " s");
    if (o.pass) o.detail = "orders 2..12 equal, " + g(t) + " s";
    return o;
}

Outcome ac2() {
    Outcome o;
    for (unsigned n = 1; n <= 8; ++n) {
        const Rational t = kernel_trace(recurrence_kernel(2 * n));
        const Rational f = sign_power(n) * pow2(static_cast<int>(2 * n) - 2) / factorial(2 * n - 1) *
                           euler_polynomial(2 * n - 1)(Rational(0));
        if (t != f) o.fail("2n = " + std::to_string(2 * n) + ": " + t.str() + " vs " + f.str());
    }
    const Rational expect[] = {Rational(1, 2), Rational(1, 6), Rational(1, 15)};
    for (unsigned n = 1; n <= 3; ++n)
        if (kernel_trace(recurrence_kernel(2 * n)) != expect[n - 1]) o.fail("trace value at 2n = " + std::to_string(2 * n));
    return o;
}

Outcome ac3() {
    Outcome o;
    for (unsigned n = 1; n <= 8; ++n) {
        const ZetaValue t = zeta_even_trace(n), b = zeta_even_bernoulli(n);
        if (t.coefficient != b.coefficient || t.pi_power != b.pi_power)
            o.fail("n = " + std::to_string(n) + ": " + t.coefficient.str() + " vs " + b.coefficient.str());
        const double series = zeta_series(2.0 * n, 1e-13).value;
        if (!(std::abs(t.value - series) <= 1e-10)) o.fail("series gap at n = " + std::to_string(n));
    }
    const Rational expect[] = {Rational(1, 6), Rational(1, 90), Rational(1, 945)};
    for (unsigned n = 1; n <= 3; ++n) {
        const ZetaValue t = zeta_even_trace(n);
        if (t.coefficient != expect[n - 1] || t.pi_power != 2 * n) o.fail("value at n = " + std::to_string(n));
    }
    return o;
}

Outcome ac4() {
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (unsigned n = 1; n <= 5; ++n) {
        const double gap = std::abs(zeta_odd_euler_integral(n, 1e-12).value - zeta_series(2.0 * n + 1.0, 1e-13).value);
        worst = std::max(worst, gap);
        if (!(gap <= 1e-10)) o.fail("integral gap " + g(gap) + " at n = " + std::to_string(n));
    }
    const double z3 = zeta_series(3.0, 1e-13).value;
    const double csc = std::abs(zeta3_cosecant(1e-10).value - z3);
    if (!(csc <= 2e-10)) o.fail("cosecant gap " + g(csc));
    for (unsigned n = 1; n <= 3; ++n) {
        const double gap = std::abs(zeta_odd_logtan(n, 1e-10).value - zeta_series(2.0 * n + 1.0, 1e-13).value);
        if (!(gap <= 2e-8)) o.fail("log-tan gap " + g(gap) + " at n = " + std::to_string(n));
    }
    const double t = seconds_since(t0);
    if (t >= 5.0) o.fail("runtime " + g(t) + " s");
    if (o.pass) o.detail = "worst integral gap " + g(worst) + ", cosecant gap " + g(csc) + ", " + g(t) + " s";
    return o;
}

Outcome ac5() {
    Outcome o;
    for (unsigned n = 1; n <= 30; ++n) {
        const UniPoly& e = euler_polynomial(n);
        if (e.derivative() != Rational(static_cast<long>(n)) * euler_polynomial(n - 1))
            o.fail("derivative identity at n = " + std::to_string(n));
        if (e.compose_linear(Rational(1), Rational(-1)) != sign_power(n) * e)
            o.fail("reflection identity at n = " + std::to_string(n));
    }
    for (unsigned n = 1; n <= 15; ++n) {
        const UniPoly& even = euler_polynomial(2 * n);
        if (euler_polynomial(2 * n - 1) != Rational(1, static_cast<long>(2 * n)) * even.derivative())
            o.fail("odd-from-even identity at n = " + std::to_string(n));
        if (euler_polynomial(2 * n - 1)(Rational(0)) != euler_odd_at_zero_from_bernoulli(n))
            o.fail("Bernoulli identity at n = " + std::to_string(n));
        if (!even(Rational(0)).is_zero() || !even(Rational(1)).is_zero())
            o.fail("even endpoints at n = " + std::to_string(n));
    }
    return o;
}

bool within3(const mc::MCEstimate& e, double target) { return std::abs(e.mean - target) <= 3.0 * e.std_error; }

Outcome ac6() {
    Outcome o;
    const auto t0 = Clock::now();
    const double zeta3 = zeta_series(3.0, 1e-13).value;
    struct Case {
        const char* name;
        mc::RegionSpec spec;
        double target;
    };
    const Case cases[] = {{"delta2", {mc::RegionKind::Delta, 2}, 0.5},
                          {"delta4", {mc::RegionKind::Delta, 4}, 1.0 / 6.0},
                          {"Delta2", {mc::RegionKind::DeltaScaled, 2}, kPi * kPi / 8.0},
                          {"amoeba", {mc::RegionKind::Amoeba, 2, 10.0}, kPi * kPi / 2.0},
                          {"U3", {mc::RegionKind::URegion, 3, 10.0}, 0.875 * zeta3}};
    constexpr std::uint64_t kSeeds[] = {20'240'601, 20'240'602};
    std::string notes;
    for (const auto& c : cases) {
        bool ok = false;
        for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
            const mc::MCEstimate e = mc::mc_volume(c.spec, 1'000'000, kSeeds[attempt]);
            ok = within3(e, c.target);
            if (attempt == 1 || ok)
                notes += std::string(notes.empty() ? "" : ", ") + c.name + " " + g(e.mean) + "+-" + g(e.std_error) +
                         (attempt ? " (retry)" : "");
        }
        if (!ok) o.fail(std::string(c.name) + " outside 3 sigma after retry");
    }
    const double t = seconds_since(t0);
    if (t >= 30.0) o.fail("runtime " + g(t) + " s");
    if (o.pass) o.detail = notes + ", " + g(t) + " s";
    return o;
}

Outcome ac7() {
    Outcome o;
    const double z2 = kPi * kPi / 6.0, z3 = zeta_series(3.0, 1e-13).value;
    constexpr std::uint64_t n = 1'000'000;
    struct Case {
        const char* name;
        mc::CubeFamily family;
        unsigned dim;
        double target;
    };
    const Case cases[] = {{"DIRECT d=2", mc::CubeFamily::Direct, 2, z2},
                          {"LOG d=2", mc::CubeFamily::Log, 2, z3},
                          {"SQUARED d=3", mc::CubeFamily::Squared, 3, 0.875 * z3}};
    std::uint64_t seed = 7'000;
    for (const auto& c : cases) {
        const mc::MCEstimate e = mc::mc_cube_integral(c.family, c.dim, n, ++seed);
        if (!within3(e, c.target)) o.fail(std::string(c.name) + " mean " + g(e.mean) + " +- " + g(e.std_error));
    }
    // Both sides of each identity estimated on independent streams.
    auto compare = [&](const char* name, std::vector<mc::WeightedFamily> lhs, std::vector<mc::WeightedFamily> rhs) {
        const mc::MCEstimate a = mc::mc_cube_combination(lhs, 2, n, ++seed);
        const mc::MCEstimate b = mc::mc_cube_combination(rhs, 2, n, ++seed);
        const double sigma = std::hypot(a.std_error, b.std_error);
        if (!(std::abs(a.mean - b.mean) <= 3.0 * sigma))
            o.fail(std::string(name) + ": " + g(a.mean) + " vs " + g(b.mean) + " (sigma " + g(sigma) + ")");
    };
    compare("direct + plus = 2 squared", {{mc::CubeFamily::Direct, 1.0}, {mc::CubeFamily::Plus, 1.0}},
            {{mc::CubeFamily::Squared, 2.0}});
    compare("direct - plus = 2^{1-d} direct", {{mc::CubeFamily::Direct, 1.0}, {mc::CubeFamily::Plus, -1.0}},
            {{mc::CubeFamily::Direct, 0.5}});
    return o;
}

Outcome ac8() {
    Outcome o;
    std::mt19937_64 rng(8'008);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (unsigned dim = 2; dim <= 6; ++dim) {
        const mc::RegionSpec trig_region{mc::RegionKind::DeltaScaled, dim};
        const mc::RegionSpec hyp_region{mc::RegionKind::URegion, dim};
        std::vector<double> p(dim);
        for (int i = 0; i < 100; ++i) {
            do
                for (auto& c : p) c = 0.5 * kPi * unit(rng);
            while (!mc::region_contains(trig_region, p));
            worst = std::max(worst, jacobian_check(BkcVariant::Trig, p, 1e-5));
            do
                for (auto& c : p) c = 3.0 * unit(rng);
            while (!mc::region_contains(hyp_region, p));
            worst = std::max(worst, jacobian_check(BkcVariant::Hyperbolic, p, 1e-5));
        }
    }
    if (!(worst <= 1e-5)) o.fail("worst discrepancy " + g(worst));
    else o.detail = "worst discrepancy " + g(worst);
    return o;
}

Outcome ac9() {
    Outcome o;
    const std::string base = "mc delta --dim 4 --samples 1000000 --seed 42 --threads ";
    const CliRun one = run_cli(base + "1"), eight = run_cli(base + "8");
    if (one.exit_code != 0 || eight.exit_code != 0) {
        o.fail("CLI exit codes " + std::to_string(one.exit_code) + ", " + std::to_string(eight.exit_code));
        return o;
    }
    const auto a = nlohmann::json::parse(one.out)["result"]["mean"].get<double>();
    const auto b = nlohmann::json::parse(eight.out)["result"]["mean"].get<double>();
    if (std::memcmp(&a, &b, sizeof a) != 0) o.fail(g(a) + " vs " + g(b));
    else o.detail = "mean " + g(a);
    return o;
}

Outcome ac10() {
    Outcome o;
    std::mt19937_64 rng(1'010);
    std::uniform_real_distribution<double> box(-10.0, 10.0);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 1000) {
        const double u = box(rng), v = box(rng);
        if (!(std::abs(std::sinh(u)) < std::cosh(v) && std::abs(std::sinh(v)) < std::cosh(u))) continue;
        worst = std::max(worst, amoeba_witness(u, v).residual);
        ++accepted;
    }
    if (!(worst <= 1e-9)) o.fail("worst residual " + g(worst));
    else o.detail = "worst residual " + g(worst);
    return o;
}

}  // namespace

int main() {
    criterion("AC1", "recurrence kernels equal closed forms", ac1);
    criterion("AC2", "kernel traces match the Euler formula", ac2);
    criterion("AC3", "even zeta by trace equals Bernoulli route", ac3);
    criterion("AC4", "odd zeta quadratures against the series", ac4);
    criterion("AC5", "Euler and Bernoulli identities", ac5);
    criterion("AC6", "Monte Carlo region volumes", ac6);
    criterion("AC7", "cube integral families", ac7);
    criterion("AC8", "finite-difference Jacobians", ac8);
    criterion("AC9", "thread-count determinism through the CLI", ac9);
    criterion("AC10", "amoeba witness residuals", ac10);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
