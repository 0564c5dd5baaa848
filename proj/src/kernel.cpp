#include "zetavol/kernel.hpp"

#include <deque>
#include <mutex>
#include <sstream>

namespace zetavol {

namespace {

const Affine kZero = Affine::of_constant(0);
const Affine kU = Affine::of_var(Var::U);
const Affine kV = Affine::of_var(Var::V);
const Affine kOneMinusU{1, -1, 0};
const Affine kOneMinusV{1, 0, -1};

// p(arg(u, v)) for a univariate p.
BiPoly compose(const UniPoly& p, const Affine& arg) {
    return substitute_affine(BiPoly::from_uni(p, Var::U), Var::U, arg);
}

}  // namespace

std::string to_string(Breakline b) { return b == Breakline::Diagonal ? "DIAGONAL" : "ANTIDIAGONAL"; }

Breakline breakline_for_order(unsigned order) {
    return order % 2 == 0 ? Breakline::Diagonal : Breakline::Antidiagonal;
}

void PiecewiseKernel::validate() const {
    if (order == 0) throw MalformedKernel("kernel order must be >= 1");
    if (breakline != breakline_for_order(order))
        throw MalformedKernel("kernel of order " + std::to_string(order) + " tagged " + to_string(breakline) +
                              ", expected " + to_string(breakline_for_order(order)));
}

Rational PiecewiseKernel::operator()(const Rational& u, const Rational& v) const {
    const int side = (breakline == Breakline::Diagonal ? u - v : u + v - Rational(1)).sign();
    if (side < 0) return low(u, v);
    if (side > 0) return high(u, v);
    return (low(u, v) + high(u, v)) / Rational(2);
}

double PiecewiseKernel::eval(double u, double v) const {
    const double gap = breakline == Breakline::Diagonal ? u - v : u + v - 1.0;
    if (gap < 0) return low.eval(u, v);
    if (gap > 0) return high.eval(u, v);
    return 0.5 * (low.eval(u, v) + high.eval(u, v));
}

PiecewiseKernel kernel_base() {
    return {1, Breakline::Antidiagonal, BiPoly::constant(1), BiPoly{}};
}

PiecewiseKernel kernel_step(const PiecewiseKernel& k) {
    k.validate();
    PiecewiseKernel out;
    out.order = k.order + 1;
    if (k.breakline == Breakline::Antidiagonal) {
        // Integrand breaks at u1 = 1 - v. It lies inside [0, 1 - u] iff v >= u.
        out.breakline = Breakline::Diagonal;
        out.low = integrate_between_affine(k.low, Var::U, kZero, kOneMinusV) +
                  integrate_between_affine(k.high, Var::U, kOneMinusV, kOneMinusU);
        out.high = integrate_between_affine(k.low, Var::U, kZero, kOneMinusU);
    } else {
        // Integrand breaks at u1 = v. It lies inside [0, 1 - u] iff u + v <= 1.
        out.breakline = Breakline::Antidiagonal;
        out.low = integrate_between_affine(k.low, Var::U, kZero, kV) +
                  integrate_between_affine(k.high, Var::U, kV, kOneMinusU);
        out.high = integrate_between_affine(k.low, Var::U, kZero, kOneMinusU);
    }
    return out;
}

PiecewiseKernel kernel_closed_form(unsigned order, const EulerTable& euler) {
    if (order == 0) throw std::invalid_argument("kernel_closed_form: order must be >= 1");
    PiecewiseKernel out;
    out.order = order;
    out.breakline = breakline_for_order(order);
    const Rational half(1, 2);
    if (order % 2 == 0) {
        const unsigned n = order / 2;
        const Rational scale = sign_power(n) * pow2(static_cast<int>(2 * n) - 2) / factorial(2 * n - 1);
        const UniPoly& e = euler(2 * n - 1);
        const BiPoly sum_term = compose(e, {0, half, half});
        out.high = scale * (sum_term + compose(e, {0, half, -half}));
        out.low = scale * (sum_term + compose(e, {0, -half, half}));
    } else {
        const unsigned n = (order - 1) / 2;
        const Rational scale = sign_power(n) * pow2(static_cast<int>(2 * n) - 1) / factorial(2 * n);
        const UniPoly& e = euler(2 * n);
        const BiPoly shared = compose(e, {half, -half, half});
        out.low = scale * (shared + compose(e, {half, -half, -half}));
        out.high = scale * (shared - compose(e, {-half, half, half}));
    }
    return out;
}

const PiecewiseKernel& recurrence_kernel(unsigned order) {
    if (order == 0) throw std::invalid_argument("recurrence_kernel: order must be >= 1");
    static std::mutex mutex;
    static std::deque<PiecewiseKernel> cache;
    std::lock_guard lock(mutex);
    if (cache.empty()) cache.push_back(kernel_base());
    while (cache.size() < order) cache.push_back(kernel_step(cache.back()));
    return cache[order - 1];
}

std::string describe_kernel_mismatch(const PiecewiseKernel& a, const PiecewiseKernel& b) {
    if (a.order != b.order)
        return "order mismatch: " + std::to_string(a.order) + " vs " + std::to_string(b.order);
    if (a.breakline != b.breakline) return "breakline mismatch: " + to_string(a.breakline) + " vs " + to_string(b.breakline);
    if (a.low != b.low) return "low piece differs: " + a.low.str() + " vs " + b.low.str();
    if (a.high != b.high) return "high piece differs: " + a.high.str() + " vs " + b.high.str();
    return {};
}

bool kernels_equal(const PiecewiseKernel& a, const PiecewiseKernel& b) {
    return describe_kernel_mismatch(a, b).empty();
}

bool kernel_is_symmetric(const PiecewiseKernel& k) {
    if (k.breakline == Breakline::Diagonal) return k.low.swapped() == k.high;
    return k.low.swapped() == k.low && k.high.swapped() == k.high;
}

bool kernel_is_continuous(const PiecewiseKernel& k) {
    const Affine line = k.breakline == Breakline::Diagonal ? kU : kOneMinusU;
    return substitute_affine(k.low - k.high, Var::V, line).is_zero();
}

KernelDiagonal kernel_diagonal(const PiecewiseKernel& k) {
    k.validate();
    if (k.order % 2 != 0) throw std::invalid_argument("kernel_diagonal: order must be even");
    return {k.order, substitute_affine(k.high, Var::V, kU).to_uni(Var::U)};
}

UniPoly kernel_diagonal_formula(unsigned order, const EulerTable& euler) {
    if (order == 0 || order % 2 != 0) throw std::invalid_argument("kernel_diagonal_formula: order must be even");
    const unsigned n = order / 2;
    const Rational scale = sign_power(n) * pow2(static_cast<int>(2 * n) - 2) / factorial(2 * n - 1);
    const UniPoly& e = euler(2 * n - 1);
    return scale * (e + UniPoly::constant(e(Rational(0))));
}

Rational kernel_trace(const PiecewiseKernel& k) {
    return kernel_diagonal(k).poly.integrate(Rational(0), Rational(1));
}

Rational kernel_trace_formula(unsigned order, const EulerTable& euler) {
    if (order == 0 || order % 2 != 0) throw std::invalid_argument("kernel_trace_formula: order must be even");
    const unsigned n = order / 2;
    return sign_power(n) * pow2(static_cast<int>(2 * n) - 2) / factorial(2 * n - 1) * euler(2 * n - 1)(Rational(0));
}

KernelSlice kernel_slice(const PiecewiseKernel& k, Var fixed, const Rational& fixed_value) {
    k.validate();
    const Var free = fixed == Var::U ? Var::V : Var::U;
    auto restrict = [&](const BiPoly& piece) {
        return substitute_affine(piece, fixed, Affine::of_constant(fixed_value)).to_uni(free);
    };
    KernelSlice s;
    if (k.breakline == Breakline::Antidiagonal) {
        s.breakpoint = Rational(1) - fixed_value;
        s.below = restrict(k.low);
        s.above = restrict(k.high);
    } else {
        s.breakpoint = fixed_value;
        // K(a, w): w < a lies in u >= v (high). K(w, b): w < b lies in v >= u (low).
        s.below = restrict(fixed == Var::U ? k.high : k.low);
        s.above = restrict(fixed == Var::U ? k.low : k.high);
    }
    return s;
}

namespace {

nlohmann::json piece_to_json(const BiPoly& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : p.to_rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) r.push_back({c.numerator_str(), c.denominator_str()});
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

nlohmann::json kernel_to_json(const PiecewiseKernel& k) {
    return {{"order", k.order},
            {"breakline", to_string(k.breakline)},
            {"piece_low", piece_to_json(k.low)},
            {"piece_high", piece_to_json(k.high)}};
}

std::string kernel_to_text(const PiecewiseKernel& k) {
    std::ostringstream os;
    const bool diag = k.breakline == Breakline::Diagonal;
    os << "K_" << k.order << "(u,v), breakline " << (diag ? "u = v" : "u + v = 1") << "\n";
    os << "  " << (diag ? "v >= u" : "u + v <= 1") << ": " << k.low.str() << "\n";
    os << "  " << (diag ? "u >= v" : "u + v >= 1") << ": " << k.high.str() << "\n";
    return os.str();
}

}  // namespace zetavol
