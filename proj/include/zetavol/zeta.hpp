#ifndef ZETAVOL_ZETA_HPP
#define ZETAVOL_ZETA_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "zetavol/rational.hpp"
#include "zetavol/special_sequences.hpp"

namespace zetavol {

/// Quadrature refinement budget ran out before the requested tolerance.
class ToleranceNotMet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ZetaKind { ExactPiPower, Numeric };

std::string to_string(ZetaKind kind);

/// A zeta value: either coefficient * pi^pi_power exactly, or a number with a
/// documented error bound. For exact values `value` is the double conversion
/// and `error_bound` covers only that conversion.
struct ZetaValue {
    ZetaKind kind = ZetaKind::Numeric;
    Rational coefficient;
    unsigned pi_power = 0;
    double value = 0.0;
    double error_bound = 0.0;
    std::string method;

    /// Builds an exact value and its double conversion.
    static ZetaValue exact(Rational coefficient, unsigned pi_power, std::string method);
};

/// zeta(2n) = 2^{2n}/(2^{2n}-1) * (pi/2)^{2n} * trace(K_{2n}) with K_{2n} from
/// the kernel recurrence. Throws std::invalid_argument for n == 0.
ZetaValue zeta_even_trace(unsigned n);

/// zeta(2n) = (-1)^{n+1} 2^{2n-1}/(2n)! B_{2n} pi^{2n}.
ZetaValue zeta_even_bernoulli(unsigned n, const BernoulliTable& bernoulli = shared_bernoulli_table());

/// zeta(2n+1) = (-1)^n pi^{2n+1} / (4 (1 - 2^{-(2n+1)}) (2n)!) * int_0^1 E_{2n}(u)/sin(pi u) du
/// by composite Gauss-Legendre. Throws std::invalid_argument for n == 0 and
/// ToleranceNotMet when the refinement budget is exhausted.
ZetaValue zeta_odd_euler_integral(unsigned n, double tol);

/// E_{2n}(u)/sin(pi u) including its removable limits at u = 0 and u = 1.
double euler_cosecant_integrand(unsigned n, double u);

/// zeta(3) = (1/7) int_0^pi x (pi - x)/sin x dx.
ZetaValue zeta3_cosecant(double tol);

/// zeta(2n+1) = -(2 pi^{2n}/(2^{2n+1}-1)) int_0^1 ln tan(pi u/2) K_{2n}(u,u) du
/// by tanh-sinh quadrature (logarithmic endpoint singularities).
ZetaValue zeta_odd_logtan(unsigned n, double tol);

/// Partial sum to N plus the midpoint of the integral-test bracket for the
/// tail; N is chosen so the bracket half-width is at most eps/2. Requires
/// s > 1 and eps > 0 (std::invalid_argument otherwise).
ZetaValue zeta_series(double s, double eps);

/// {kind, coefficient: "p/q" | null, pi_power, value, error_bound, method}
nlohmann::json to_json(const ZetaValue& z);

}  // namespace zetavol

#endif  // ZETAVOL_ZETA_HPP
