#include "zetavol/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zetavol {

namespace {

// Appends "c*name" style terms; shared by both printers.
void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& monomial) {
    if (c.is_zero()) return;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (monomial.empty()) {
        os << (mag.is_integer() ? mag.numerator_str() : mag.str());
    } else if (unit) {
        os << monomial;
    } else {
        os << (mag.is_integer() ? mag.numerator_str() : mag.str()) << "*" << monomial;
    }
}

std::string power_name(const std::string& var, std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

std::vector<double> UniPoly::to_doubles() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_double());
    return out;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return UniPoly(std::move(a));
}

Rational UniPoly::integrate(const Rational& a, const Rational& b) const {
    const UniPoly anti = antiderivative();
    return anti(b) - anti(a);
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
    const UniPoly lin({a, b});
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) append_term(os, first, coeffs_[k], power_name(var, k));
    return os.str();
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const std::vector<std::vector<Rational>>& rows) {
    rows_ = rows.size();
    cols_ = 0;
    for (const auto& r : rows) cols_ = std::max(cols_, r.size());
    coeffs_.assign(rows_ * cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) at(i, j) = rows[i][j];
    normalize();
}

BiPoly::BiPoly(std::size_t rows, std::size_t cols, std::vector<Rational> flat)
    : rows_(rows), cols_(cols), coeffs_(std::move(flat)) {
    normalize();
}

BiPoly BiPoly::constant(const Rational& c) { return BiPoly(1, 1, {c}); }

BiPoly BiPoly::from_affine(const Affine& a) {
    return BiPoly(std::vector<std::vector<Rational>>{{a.constant, a.v_coeff}, {a.u_coeff}});
}

BiPoly BiPoly::from_uni(const UniPoly& p, Var var) {
    const auto c = p.coefficients();
    if (var == Var::U) return BiPoly(c.size(), 1, std::vector<Rational>(c.begin(), c.end()));
    return BiPoly(1, c.size(), std::vector<Rational>(c.begin(), c.end()));
}

void BiPoly::normalize() {
    std::size_t new_rows = 0, new_cols = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) {
                new_rows = std::max(new_rows, i + 1);
                new_cols = std::max(new_cols, j + 1);
            }
    if (new_rows == rows_ && new_cols == cols_) return;
    std::vector<Rational> trimmed(new_rows * new_cols);
    for (std::size_t i = 0; i < new_rows; ++i)
        for (std::size_t j = 0; j < new_cols; ++j) trimmed[i * new_cols + j] = at(i, j);
    rows_ = new_rows;
    cols_ = new_cols;
    coeffs_ = std::move(trimmed);
}

Rational BiPoly::coeff(std::size_t i, std::size_t j) const {
    return (i < rows_ && j < cols_) ? at(i, j) : Rational(0);
}

std::vector<std::vector<Rational>> BiPoly::to_rows() const {
    std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j);
    return out;
}

Rational BiPoly::operator()(const Rational& u, const Rational& v) const {
    Rational acc;
    for (std::size_t i = rows_; i-- > 0;) {
        Rational row;
        for (std::size_t j = cols_; j-- > 0;) row = row * v + at(i, j);
        acc = acc * u + row;
    }
    return acc;
}

double BiPoly::eval(double u, double v) const {
    double acc = 0.0;
    for (std::size_t i = rows_; i-- > 0;) {
        double row = 0.0;
        for (std::size_t j = cols_; j-- > 0;) row = row * v + at(i, j).to_double();
        acc = acc * u + row;
    }
    return acc;
}

BiPoly BiPoly::swapped() const {
    std::vector<Rational> t(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = at(i, j);
    return BiPoly(cols_, rows_, std::move(t));
}

UniPoly BiPoly::to_uni(Var var) const {
    if (var == Var::U) {
        if (cols_ > 1) throw std::invalid_argument("BiPoly::to_uni: polynomial depends on v");
        std::vector<Rational> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, 0);
        return UniPoly(std::move(c));
    }
    if (rows_ > 1) throw std::invalid_argument("BiPoly::to_uni: polynomial depends on u");
    return UniPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.end()));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    const std::size_t r = std::max(rows_, o.rows_), c = std::max(cols_, o.cols_);
    std::vector<Rational> sum(r * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) sum[i * c + j] = coeff(i, j) + o.coeff(i, j);
    *this = BiPoly(r, c, std::move(sum));
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly& BiPoly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t r = a.rows_ + b.rows_ - 1, c = a.cols_ + b.cols_ - 1;
    std::vector<Rational> prod(r * c);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Rational& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l) prod[(i + k) * c + (j + l)] += x * b.at(k, l);
        }
    return BiPoly(r, c, std::move(prod));
}

std::string BiPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Graded by total degree, highest first.
    for (std::size_t total = rows_ + cols_; total-- > 0;)
        for (std::size_t i = std::min(total, rows_ - 1) + 1; i-- > 0;) {
            const std::size_t j = total - i;
            if (j >= cols_) break;
            std::string mono = power_name("u", i);
            const std::string vpart = power_name("v", j);
            if (!vpart.empty()) mono = mono.empty() ? vpart : mono + "*" + vpart;
            append_term(os, first, at(i, j), mono);
        }
    return os.str();
}

// ---------------------------------------------------------------- free functions

BiPoly derivative(const BiPoly& p, Var var) {
    const auto rows = p.to_rows();
    std::vector<std::vector<Rational>> d;
    if (var == Var::U) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            std::vector<Rational> r = rows[i];
            for (auto& c : r) c *= Rational(static_cast<long>(i));
            d.push_back(std::move(r));
        }
    } else {
        for (const auto& row : rows) {
            std::vector<Rational> r;
            for (std::size_t j = 1; j < row.size(); ++j) r.push_back(row[j] * Rational(static_cast<long>(j)));
            d.push_back(std::move(r));
        }
    }
    return BiPoly(d);
}

BiPoly antiderivative(const BiPoly& p, Var var) {
    const auto rows = p.to_rows();
    std::vector<std::vector<Rational>> a;
    if (var == Var::U) {
        a.emplace_back();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<Rational> r = rows[i];
            for (auto& c : r) c /= Rational(static_cast<long>(i + 1));
            a.push_back(std::move(r));
        }
    } else {
        for (const auto& row : rows) {
            std::vector<Rational> r(row.size() + 1);
            for (std::size_t j = 0; j < row.size(); ++j) r[j + 1] = row[j] / Rational(static_cast<long>(j + 1));
            a.push_back(std::move(r));
        }
    }
    return BiPoly(a);
}

BiPoly substitute_affine(const BiPoly& p, Var var, const Affine& expr) {
    // Horner in the substituted variable: each slice is a polynomial in the
    // remaining variable, lifted back to Q[u, v].
    const BiPoly e = BiPoly::from_affine(expr);
    const auto rows = p.to_rows();
    const Var other = var == Var::U ? Var::V : Var::U;
    const std::size_t degree = var == Var::U ? p.rows() : p.cols();
    BiPoly acc;
    for (std::size_t k = degree; k-- > 0;) {
        std::vector<Rational> slice;
        if (var == Var::U) {
            slice = rows[k];
        } else {
            for (const auto& row : rows) slice.push_back(row[k]);
        }
        acc = acc * e + BiPoly::from_uni(UniPoly(std::move(slice)), other);
    }
    return acc;
}

BiPoly integrate_between_affine(const BiPoly& p, Var var, const Affine& lower, const Affine& upper) {
    const BiPoly anti = antiderivative(p, var);
    return substitute_affine(anti, var, upper) - substitute_affine(anti, var, lower);
}

}  // namespace zetavol
