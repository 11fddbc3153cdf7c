#pragma once

/**
 * @file tripoly.hpp
 * @brief Sparse trivariate polynomials over the rationals and the flatness
 *        operator Pi(p) = p_Y^2 p_XX - 2 p_X p_Y p_XY + p_X^2 p_YY.
 *
 * Exponent triples (i, j, k) index X^i Y^j Z^k; no zero coefficient is ever
 * stored, so the zero polynomial is the empty map and equality is structural.
 */

#include <array>
#include <map>
#include <optional>
#include <string>

#include "rotlab/lift.hpp"
#include "rotlab/surface.hpp"
#include "rotlab/unipoly.hpp"

namespace rotlab {

class TriPoly {
public:
    using Exponent = std::array<int, 3>;
    using Terms = std::map<Exponent, Rational>;

    TriPoly() = default;
    static TriPoly constant(const Rational& c) { return monomial(c, 0, 0, 0); }
    static TriPoly monomial(const Rational& c, int i, int j, int k);
    /// axis 0 = X, 1 = Y, 2 = Z.
    static TriPoly variable(int axis);

    bool is_zero() const { return terms_.empty(); }
    int degree() const; // max i+j+k; -1 for zero
    const Terms& terms() const { return terms_; }
    Rational coeff(int i, int j, int k) const;

    TriPoly operator+(const TriPoly& o) const;
    TriPoly operator-(const TriPoly& o) const;
    TriPoly operator*(const TriPoly& o) const;
    TriPoly operator-() const;
    TriPoly scaled(const Rational& s) const;

    bool operator==(const TriPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TriPoly& o) const { return !(*this == o); }

    Rational eval(const XYZPoint& pt) const;

    /// Formal partial derivative; axis 0 = X, 1 = Y, 2 = Z.
    TriPoly partial(int axis) const;
    std::array<Rational, 3> gradient_at(const XYZPoint& pt) const;

    std::string to_string() const;

private:
    void add_term(const Exponent& e, const Rational& c);
    Terms terms_;
};

/// The flatness operator; identically zero for any polynomial linear in X
/// and Y, degree at most 3 deg(p) - 4 otherwise.
TriPoly pi_operator(const TriPoly& p);

/// Restrict p to a parabola: substitute (X(Z), Y(Z), Z). The result has
/// degree at most 2 deg(p); computed by Horner in X then Y so intermediate
/// degrees never exceed that.
UniPoly compose_with_parabola(const TriPoly& p, const HParabola& h);

inline bool vanishes_on_parabola(const TriPoly& p, const HParabola& h) {
    return compose_with_parabola(p, h).is_zero();
}

inline bool is_critical_point(const TriPoly& p, const XYZPoint& pt) {
    if (!p.eval(pt).is_zero()) return false;
    const auto g = p.gradient_at(pt);
    return g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
}

/// p and all three partials vanish identically on h.
bool is_critical_parabola(const TriPoly& p, const HParabola& h);

inline bool is_flat_parabola(const TriPoly& p, const HParabola& h) {
    return vanishes_on_parabola(pi_operator(p), h);
}

struct SpecialForm {
    Rational lam;
    Rational mu;
    QuadCoeffs q3;
    QuadCoeffs q4;
};

/// Decide whether p = E2(Z) X - E1(Z) Y + (E1 Q4 - E2 Q3)(Z) for some
/// (lam, mu) != 0 and pair-shaped quadratics Q3, Q4; an exact linear solve
/// recovers a witness when one exists.
std::optional<SpecialForm> is_special_form(const TriPoly& p);

/// The defining cubic of a special surface as a TriPoly.
TriPoly to_polynomial(const SpecialSurface& sigma);

/// Serialization entries [i, j, k, coeff], sorted lexicographically.
struct TriPolyTerm {
    int i, j, k;
    Rational coeff;
};
std::vector<TriPolyTerm> tripoly_terms(const TriPoly& p);
TriPoly tripoly_from_terms(const std::vector<TriPolyTerm>& terms);

} // namespace rotlab
