#ifndef ZETAVOL_QUADRATURE_HPP
#define ZETAVOL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace zetavol::quad {

struct Result {
    double value = 0.0;
    /// Difference between the last two refinements.
    double delta = 0.0;
    /// Floating-point noise floor: a multiple of eps * sum |w f|.
    double rounding = 0.0;
    int refinements = 0;
    bool converged = false;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre_rule(unsigned points);

/// Composite Gauss-Legendre on [a, b] with 1, 2, 4, ... panels. Only interior
/// points are sampled. Stops once 2 * delta <= tol, after at most
/// max_refinements doublings.
Result gauss_legendre(const std::function<double(double)>& f, double a, double b, double tol,
                      int max_refinements = 10);

/// Integrand for tanh-sinh: receives x together with its distances to a and b,
/// which stay accurate when x itself rounds to an endpoint.
using EndpointAwareFn = std::function<double(double x, double from_a, double to_b)>;

/// Tanh-sinh (double exponential) rule on [a, b], halving the step each level.
/// Suited to integrable endpoint singularities such as logarithms.
Result tanh_sinh(const EndpointAwareFn& f, double a, double b, double tol, int max_refinements = 10);

}  // namespace zetavol::quad

#endif  // ZETAVOL_QUADRATURE_HPP
