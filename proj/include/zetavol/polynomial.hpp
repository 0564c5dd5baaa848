#ifndef ZETAVOL_POLYNOMIAL_HPP
#define ZETAVOL_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zetavol/rational.hpp"

namespace zetavol {

/// Variables of the bivariate ring Q[u, v].
enum class Var { U, V };

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    /// c * x^degree
    static UniPoly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Zero beyond the stored range.
    Rational coeff(std::size_t i) const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;
    /// Horner evaluation of the double-rounded coefficients.
    double eval(double x) const;
    std::vector<double> to_doubles() const;

    UniPoly derivative() const;
    /// Antiderivative with zero constant term.
    UniPoly antiderivative() const;
    Rational integrate(const Rational& a, const Rational& b) const;
    /// p(a + b x)
    UniPoly compose_linear(const Rational& a, const Rational& b) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Affine form c0 + cu*u + cv*v.
struct Affine {
    Rational constant;
    Rational u_coeff;
    Rational v_coeff;

    static Affine of_constant(const Rational& c) { return {c, 0, 0}; }
    static Affine of_var(Var var) { return var == Var::U ? Affine{0, 1, 0} : Affine{0, 0, 1}; }
};

/// Dense bivariate polynomial over Q; entry (i, j) multiplies u^i v^j.
/// Canonical form trims trailing all-zero rows and columns, so structural
/// equality is polynomial equality.
class BiPoly {
public:
    BiPoly() = default;
    /// rows[i][j] is the coefficient of u^i v^j; ragged rows are zero-padded.
    explicit BiPoly(const std::vector<std::vector<Rational>>& rows);
    static BiPoly constant(const Rational& c);
    static BiPoly from_affine(const Affine& a);
    /// Lifts p(x) to p(u) or p(v).
    static BiPoly from_uni(const UniPoly& p, Var var);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    /// Coefficient of u^i v^j; zero outside the stored block.
    Rational coeff(std::size_t i, std::size_t j) const;
    std::vector<std::vector<Rational>> to_rows() const;

    Rational operator()(const Rational& u, const Rational& v) const;
    double eval(double u, double v) const;

    /// p(v, u)
    BiPoly swapped() const;
    /// Narrows to a univariate polynomial; throws std::invalid_argument if the
    /// other variable occurs.
    UniPoly to_uni(Var var) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    std::string str() const;

private:
    BiPoly(std::size_t rows, std::size_t cols, std::vector<Rational> flat);
    Rational& at(std::size_t i, std::size_t j) { return coeffs_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return coeffs_[i * cols_ + j]; }
    void normalize();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> coeffs_;  // row-major rows_ x cols_
};

/// Partial derivative with respect to var.
BiPoly derivative(const BiPoly& p, Var var);

/// Antiderivative in var with zero integration constant.
BiPoly antiderivative(const BiPoly& p, Var var);

/// Replaces var by expr. The expression is written in the output variables, so
/// substituting u := 1 - u into u*v yields v - u*v.
BiPoly substitute_affine(const BiPoly& p, Var var, const Affine& expr);

/// Integral of p over var between two affine bounds:
/// A(upper) - A(lower) with A the antiderivative in var.
BiPoly integrate_between_affine(const BiPoly& p, Var var, const Affine& lower, const Affine& upper);

}  // namespace zetavol

#endif  // ZETAVOL_POLYNOMIAL_HPP
