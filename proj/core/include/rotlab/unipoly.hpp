#pragma once

/**
 * @file unipoly.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Coefficients are stored ascending: coeff(i) is the coefficient of Z^i.
 * The zero polynomial has degree -1.
 */

#include <string>
#include <vector>

#include "rotlab/rational.hpp"

namespace rotlab {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
    /// Monomial c * Z^k.
    static UniPoly monomial(Rational c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& z) const;
    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Rational& s) const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    /// Euclidean division; *this = q * d + r with deg r < deg d.
    void divmod(const UniPoly& d, UniPoly* q, UniPoly* r) const;
    /// Exact division; throws if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& d) const;
    bool divisible_by(const UniPoly& d) const;

    /// Monic gcd.
    static UniPoly gcd(UniPoly a, UniPoly b);
    /// Largest square-free divisor: this / gcd(this, this').
    UniPoly squarefree_part() const;

    /// Scale to integer coefficients with content 1 and positive leading
    /// coefficient; roots are unchanged.
    UniPoly primitive_integer() const;

    std::string to_string(const std::string& var = "Z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace rotlab
