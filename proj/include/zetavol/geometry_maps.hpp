#ifndef ZETAVOL_GEOMETRY_MAPS_HPP
#define ZETAVOL_GEOMETRY_MAPS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetavol {

/// Raised for points outside the domain of a map or witness.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class BkcVariant { Trig, Hyperbolic };

std::string to_string(BkcVariant variant);

/// Cyclic substitution x_i = sin u_i / cos u_{i+1} (Trig) or
/// sinh u_i / cosh u_{i+1} (Hyperbolic). Trig needs components in
/// [0, pi/2) and each denominator cosine above 1e-12; Hyperbolic needs
/// nonnegative components. Dimension must be at least 2.
std::vector<double> bkc_map(BkcVariant variant, std::span<const double> point);

/// 1 - (-1)^n prod x_i^2 (Trig) or 1 - prod x_i^2 (Hyperbolic), with x the
/// image of `point`.
double bkc_jacobian_formula(BkcVariant variant, std::span<const double> point);

/// Determinant of the central-difference Jacobian with step h.
double numeric_jacobian_determinant(BkcVariant variant, std::span<const double> point, double h);

/// |numeric determinant - formula|. Requires h in [1e-6, 1e-4] and a point
/// whose h-neighbourhood stays inside the domain (DomainError otherwise).
double jacobian_check(BkcVariant variant, std::span<const double> point, double h);

struct AmoebaWitness {
    double phi_u = 0.0;
    double phi_v = 0.0;
    /// |P(z1, z2)| for z1 = e^{u + i phi_u}, z2 = e^{v - i phi_v}.
    double residual = 0.0;
};

/// Angles placing (u, v) on the log-modulus image of the zero set of
/// z1 - 1/z1 - i (z2 - 1/z2). Throws DomainError unless |sinh u| < cosh v
/// and |sinh v| < cosh u hold strictly.
AmoebaWitness amoeba_witness(double u, double v);

}  // namespace zetavol

#endif  // ZETAVOL_GEOMETRY_MAPS_HPP
