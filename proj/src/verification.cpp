#include "zetavol/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "zetavol/kernel.hpp"
#include "zetavol/zeta.hpp"

namespace zetavol {

namespace {

// Runs one check; `body` returns an empty string on success.
void record(std::vector<IdentityCheck>& out, std::string name, const std::function<std::string()>& body) {
    IdentityCheck c;
    c.name = std::move(name);
    try {
        c.detail = body();
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
    }
    c.passed = c.detail.empty();
    out.push_back(std::move(c));
}

std::string num(unsigned n) { return std::to_string(n); }

}  // namespace

std::vector<IdentityCheck> run_identity_suite(unsigned max_order, const EulerTable& euler,
                                              const BernoulliTable& bernoulli) {
    if (max_order == 0 || max_order > kMaxVerifyOrder)
        throw std::invalid_argument("max order must lie in 1.." + num(kMaxVerifyOrder));
    std::vector<IdentityCheck> out;

    for (unsigned order = 2; order <= max_order; ++order)
        record(out, "kernel_recurrence_vs_closed_form[" + num(order) + "]",
               [&] { return describe_kernel_mismatch(recurrence_kernel(order), kernel_closed_form(order, euler)); });

    for (unsigned n = 1; n <= 2 * max_order; ++n) {
        record(out, "euler_derivative[" + num(n) + "]", [&]() -> std::string {
            if (euler(n).derivative() == Rational(static_cast<long>(n)) * euler(n - 1)) return {};
            return "E_n' != n E_{n-1}";
        });
        record(out, "euler_reflection[" + num(n) + "]", [&]() -> std::string {
            if (euler(n).compose_linear(Rational(1), Rational(-1)) == sign_power(n) * euler(n)) return {};
            return "E_n(1-x) != (-1)^n E_n(x)";
        });
    }

    for (unsigned n = 1; n <= max_order; ++n) {
        record(out, "euler_even_endpoints[" + num(n) + "]", [&]() -> std::string {
            const UniPoly& e = euler(2 * n);
            if (e(Rational(0)).is_zero() && e(Rational(1)).is_zero()) return {};
            return "E_2n(0) = " + e(Rational(0)).str() + ", E_2n(1) = " + e(Rational(1)).str();
        });
        record(out, "euler_odd_from_even[" + num(n) + "]", [&]() -> std::string {
            if (euler(2 * n - 1) == Rational(1, static_cast<long>(2 * n)) * euler(2 * n).derivative()) return {};
            return "E_{2n-1} != E_2n'/(2n)";
        });
        record(out, "euler_odd_at_zero_bernoulli[" + num(n) + "]", [&]() -> std::string {
            euler_odd_at_zero(n, euler, bernoulli);
            return {};
        });
    }

    for (unsigned n = 1; 2 * n <= max_order; ++n) {
        record(out, "trace_formula[" + num(2 * n) + "]", [&]() -> std::string {
            const Rational t = kernel_trace(recurrence_kernel(2 * n));
            const Rational f = kernel_trace_formula(2 * n, euler);
            if (t == f) return {};
            return "trace " + t.str() + " != formula " + f.str();
        });
        record(out, "zeta_even_trace_vs_bernoulli[" + num(n) + "]", [&]() -> std::string {
            const ZetaValue t = zeta_even_trace(n), b = zeta_even_bernoulli(n, bernoulli);
            if (t.coefficient == b.coefficient) return {};
            return "trace " + t.coefficient.str() + " != bernoulli " + b.coefficient.str();
        });
    }

    for (unsigned n = 1; n <= std::min(3u, max_order / 2); ++n) {
        record(out, "zeta_odd_integral_vs_series[" + num(2 * n + 1) + "]", [&]() -> std::string {
            const double q = zeta_odd_euler_integral(n, 1e-12).value;
            const double s = zeta_series(2.0 * n + 1.0, 1e-13).value;
            if (std::abs(q - s) <= 1e-10) return {};
            return "integral " + std::to_string(q) + " vs series " + std::to_string(s);
        });
    }
    return out;
}

nlohmann::json to_json(const std::vector<IdentityCheck>& checks) {
    nlohmann::json list = nlohmann::json::array();
    std::size_t failed = 0;
    for (const auto& c : checks) {
        nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) {
            j["detail"] = c.detail;
            ++failed;
        }
        list.push_back(std::move(j));
    }
    return {{"checks", list}, {"total", checks.size()}, {"failed", failed}, {"all_passed", failed == 0}};
}

}  // namespace zetavol
