#ifndef ZETAVOL_KERNEL_HPP
#define ZETAVOL_KERNEL_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "zetavol/polynomial.hpp"
#include "zetavol/special_sequences.hpp"

namespace zetavol {

/// Line separating the two polynomial pieces of a kernel on the unit square.
enum class Breakline {
    Diagonal,      ///< u = v; low piece where v >= u, high piece where u >= v
    Antidiagonal,  ///< u + v = 1; low piece where u + v <= 1, high piece where u + v >= 1
};

std::string to_string(Breakline b);

class MalformedKernel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Kernel K_n(u, v) of the n-th power of (Tf)(u) = int_0^{1-u} f(v) dv, as two
/// polynomial pieces on either side of a breakline. Even orders break on the
/// diagonal, odd orders on the antidiagonal.
struct PiecewiseKernel {
    unsigned order = 1;
    Breakline breakline = Breakline::Antidiagonal;
    BiPoly low;
    BiPoly high;

    /// Exact value; on the breakline the mean of both pieces (step function
    /// takes 1/2 at zero).
    Rational operator()(const Rational& u, const Rational& v) const;
    double eval(double u, double v) const;

    /// Throws MalformedKernel if the breakline does not match the parity of order.
    void validate() const;
};

/// Breakline implied by the parity of an order.
Breakline breakline_for_order(unsigned order);

/// K_1: indicator of the triangle u, v >= 0, u + v <= 1.
PiecewiseKernel kernel_base();

/// K_{n+1}(u, v) = int_0^{1-u} K_n(u1, v) du1, done piece by piece with exact
/// affine-bound integration.
PiecewiseKernel kernel_step(const PiecewiseKernel& k);

/// K_order built directly from Euler polynomials of the half-sum/half-difference
/// arguments. Independent of kernel_step.
PiecewiseKernel kernel_closed_form(unsigned order, const EulerTable& euler = shared_euler_table());

/// Recurrence-built K_order, memoized across calls (thread-safe).
const PiecewiseKernel& recurrence_kernel(unsigned order);

bool kernels_equal(const PiecewiseKernel& a, const PiecewiseKernel& b);

/// Empty when equal; otherwise the first difference found.
std::string describe_kernel_mismatch(const PiecewiseKernel& a, const PiecewiseKernel& b);

/// K(u, v) == K(v, u) exactly.
bool kernel_is_symmetric(const PiecewiseKernel& k);

/// The two pieces agree on the breakline.
bool kernel_is_continuous(const PiecewiseKernel& k);

/// Diagonal restriction K_{2n}(u, u).
struct KernelDiagonal {
    unsigned order = 2;
    UniPoly poly;
};

/// Throws std::invalid_argument for odd orders.
KernelDiagonal kernel_diagonal(const PiecewiseKernel& k);

/// (-1)^n 2^{2n-2}/(2n-1)! * [E_{2n-1}(u) + E_{2n-1}(0)] for even order 2n.
UniPoly kernel_diagonal_formula(unsigned order, const EulerTable& euler = shared_euler_table());

/// int_0^1 K_{2n}(u, u) du, the volume of the cyclic polytope of dimension 2n.
Rational kernel_trace(const PiecewiseKernel& k);

/// (-1)^n 2^{2n-2}/(2n-1)! * E_{2n-1}(0) for even order 2n.
Rational kernel_trace_formula(unsigned order, const EulerTable& euler = shared_euler_table());

/// One-variable restriction of a kernel: the polynomial in w below and above a
/// single rational breakpoint.
struct KernelSlice {
    Rational breakpoint;
    UniPoly below;
    UniPoly above;
};

/// K(fixed_value, w) when fixed == Var::U, K(w, fixed_value) when fixed == Var::V.
KernelSlice kernel_slice(const PiecewiseKernel& k, Var fixed, const Rational& fixed_value);

/// JSON: {order, breakline, piece_low, piece_high}; each piece is a matrix of
/// ["numerator", "denominator"] string pairs with entry [i][j] for u^i v^j.
nlohmann::json kernel_to_json(const PiecewiseKernel& k);

/// Human-readable dump.
std::string kernel_to_text(const PiecewiseKernel& k);

}  // namespace zetavol

#endif  // ZETAVOL_KERNEL_HPP
