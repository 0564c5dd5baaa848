#ifndef ZETAVOL_SPECIAL_SEQUENCES_HPP
#define ZETAVOL_SPECIAL_SEQUENCES_HPP

#include <deque>
#include <mutex>
#include <stdexcept>

#include "zetavol/polynomial.hpp"
#include "zetavol/rational.hpp"

namespace zetavol {

/// Highest order served by the memo tables.
inline constexpr unsigned kMaxSequenceOrder = 64;

/// Raised when two independent exact routes to the same quantity disagree.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Memoized Euler polynomials E_n(x), built from
///   E_n(x) = x^n - 1/2 * sum_{k<n} C(n,k) E_k(x).
/// Growth is guarded by a mutex; returned references stay valid for the
/// lifetime of the table.
class EulerTable {
public:
    const UniPoly& operator()(unsigned n) const;

    /// Fault-injection hook for verification tests: overwrites E_n in this
    /// table only. Entries above n that were already built are not rebuilt.
    void replace_for_testing(unsigned n, UniPoly poly);

private:
    void grow_locked(unsigned n) const;

    mutable std::mutex mutex_;
    mutable std::deque<UniPoly> polys_;
};

/// Memoized Bernoulli numbers from sum_{k=0}^{m} C(m+1,k) B_k = 0, B_0 = 1
/// (so B_1 = -1/2).
class BernoulliTable {
public:
    const Rational& operator()(unsigned m) const;

private:
    mutable std::mutex mutex_;
    mutable std::deque<Rational> values_;
};

/// Process-wide tables.
const EulerTable& shared_euler_table();
const BernoulliTable& shared_bernoulli_table();

const UniPoly& euler_polynomial(unsigned n);
const Rational& bernoulli_number(unsigned m);

/// E_{2n-1}(0) from the Bernoulli route: -(2/(2n)) (2^{2n} - 1) B_{2n}.
Rational euler_odd_at_zero_from_bernoulli(unsigned n, const BernoulliTable& bernoulli = shared_bernoulli_table());

/// E_{2n-1}(0), n >= 1, computed by evaluating the Euler polynomial and by the
/// Bernoulli route. Throws InternalInconsistency if the two disagree and
/// std::invalid_argument for n == 0.
Rational euler_odd_at_zero(unsigned n, const EulerTable& euler = shared_euler_table(),
                           const BernoulliTable& bernoulli = shared_bernoulli_table());

}  // namespace zetavol

#endif  // ZETAVOL_SPECIAL_SEQUENCES_HPP
