#include "zetavol/special_sequences.hpp"

#include <string>

namespace zetavol {

namespace {

void check_order(unsigned n) {
    if (n > kMaxSequenceOrder)
        throw std::invalid_argument("sequence order " + std::to_string(n) + " exceeds supported maximum " +
                                    std::to_string(kMaxSequenceOrder));
}

}  // namespace

void EulerTable::grow_locked(unsigned n) const {
    while (polys_.size() <= n) {
        const auto m = static_cast<unsigned>(polys_.size());
        UniPoly sum;
        for (unsigned k = 0; k < m; ++k) sum += binomial(m, k) * polys_[k];
        polys_.push_back(UniPoly::monomial(Rational(1), m) - Rational(1, 2) * sum);
    }
}

const UniPoly& EulerTable::operator()(unsigned n) const {
    check_order(n);
    std::lock_guard lock(mutex_);
    grow_locked(n);
    return polys_[n];
}

void EulerTable::replace_for_testing(unsigned n, UniPoly poly) {
    check_order(n);
    std::lock_guard lock(mutex_);
    grow_locked(n);
    polys_[n] = std::move(poly);
}

const Rational& BernoulliTable::operator()(unsigned m) const {
    check_order(m);
    std::lock_guard lock(mutex_);
    while (values_.size() <= m) {
        const auto j = static_cast<unsigned>(values_.size());
        if (j == 0) {
            values_.emplace_back(1);
            continue;
        }
        // C(j+1, j) B_j = -sum_{k<j} C(j+1, k) B_k
        Rational sum;
        for (unsigned k = 0; k < j; ++k) sum += binomial(j + 1, k) * values_[k];
        values_.push_back(-sum / binomial(j + 1, j));
    }
    return values_[m];
}

const EulerTable& shared_euler_table() {
    static const EulerTable table;
    return table;
}

const BernoulliTable& shared_bernoulli_table() {
    static const BernoulliTable table;
    return table;
}

const UniPoly& euler_polynomial(unsigned n) { return shared_euler_table()(n); }

const Rational& bernoulli_number(unsigned m) { return shared_bernoulli_table()(m); }

Rational euler_odd_at_zero_from_bernoulli(unsigned n, const BernoulliTable& bernoulli) {
    if (n == 0) throw std::invalid_argument("euler_odd_at_zero: n must be >= 1");
    return -Rational(2) / Rational(static_cast<long>(2 * n)) * (pow2(static_cast<int>(2 * n)) - Rational(1)) *
           bernoulli(2 * n);
}

Rational euler_odd_at_zero(unsigned n, const EulerTable& euler, const BernoulliTable& bernoulli) {
    if (n == 0) throw std::invalid_argument("euler_odd_at_zero: n must be >= 1");
    const Rational from_poly = euler(2 * n - 1)(Rational(0));
    const Rational from_bernoulli = euler_odd_at_zero_from_bernoulli(n, bernoulli);
    if (from_poly != from_bernoulli)
        throw InternalInconsistency("E_" + std::to_string(2 * n - 1) + "(0): polynomial route gives " +
                                    from_poly.str() + ", Bernoulli route gives " + from_bernoulli.str());
    return from_poly;
}

}  // namespace zetavol
