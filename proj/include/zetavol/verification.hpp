#ifndef ZETAVOL_VERIFICATION_HPP
#define ZETAVOL_VERIFICATION_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "zetavol/special_sequences.hpp"

namespace zetavol {

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;  ///< empty on success
};

/// Largest order accepted by run_identity_suite.
inline constexpr unsigned kMaxVerifyOrder = 12;

/// Runs the exact and numeric identity checks up to `max_order`:
///   recurrence kernel == closed form, orders 2..max_order
///   E_n' = n E_{n-1} and E_n(1-x) = (-1)^n E_n(x), n <= 2 max_order
///   E_{2n}(0) = E_{2n}(1) = 0, E_{2n-1} = E_{2n}'/(2n), Bernoulli route for
///   E_{2n-1}(0), n <= max_order
///   kernel trace == Euler formula and trace zeta == Bernoulli zeta, 2n <= max_order
///   cosecant integral vs series for zeta(2n+1), n <= min(3, max_order/2)
/// Exceptions inside a check count as failures. Throws std::invalid_argument
/// when max_order is 0 or above kMaxVerifyOrder.
std::vector<IdentityCheck> run_identity_suite(unsigned max_order, const EulerTable& euler = shared_euler_table(),
                                              const BernoulliTable& bernoulli = shared_bernoulli_table());

nlohmann::json to_json(const std::vector<IdentityCheck>& checks);

}  // namespace zetavol

#endif  // ZETAVOL_VERIFICATION_HPP
