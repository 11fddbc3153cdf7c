#pragma once

/**
 * @file lift.hpp
 * @brief The tan-half-angle chart: rotations as points, point pairs as
 *        parabolas, and the R^4 point/2-plane dualization.
 *
 * A rotation with p != (-1, 0) lifts to (X, Y, Z) with Z = tan(theta/2) =
 * p2/(1+p1), X = xi (1+Z^2), Y = eta (1+Z^2). The locus of rotations mapping
 * a to b becomes the planar parabola
 *
 *     X = (a1+b1) Z^2 + 2 a2 Z + (b1-a1)
 *     Y = (a2+b2) Z^2 - 2 a1 Z + (b2-a2),
 *
 * degenerate (a line) exactly when b = -a. Half-turns are first-class
 * rotations everywhere else in the library; every chart-based operation here
 * rejects them with ChartExcluded.
 */

#include <array>
#include <optional>

#include "rotlab/motion.hpp"
#include "rotlab/unipoly.hpp"

namespace rotlab {

struct XYZPoint {
    Rational x;
    Rational y;
    Rational z;

    bool operator==(const XYZPoint& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const XYZPoint& o) const { return !(*this == o); }
};

/// Quadratic in Z stored as (Z^2 coefficient, Z coefficient, constant).
using QuadCoeffs = std::array<Rational, 3>;

inline Rational eval_quad(const QuadCoeffs& q, const Rational& z) {
    return (q[0] * z + q[1]) * z + q[2];
}

class HParabola {
public:
    /// Throws DegenerateParabola when b == -a.
    HParabola(PlanarPoint a, PlanarPoint b);

    const PlanarPoint& a() const { return a_; }
    const PlanarPoint& b() const { return b_; }
    const QuadCoeffs& xcoef() const { return xc_; }
    const QuadCoeffs& ycoef() const { return yc_; }

    Rational x_at(const Rational& z) const { return eval_quad(xc_, z); }
    Rational y_at(const Rational& z) const { return eval_quad(yc_, z); }
    UniPoly x_poly() const { return UniPoly({xc_[2], xc_[1], xc_[0]}); }
    UniPoly y_poly() const { return UniPoly({yc_[2], yc_[1], yc_[0]}); }

    XYZPoint point_at(const Rational& z) const { return {x_at(z), y_at(z), z}; }

    bool operator==(const HParabola& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const HParabola& o) const { return !(*this == o); }

private:
    PlanarPoint a_;
    PlanarPoint b_;
    QuadCoeffs xc_;
    QuadCoeffs yc_;
};

inline HParabola parabola_from_pair(const PlanarPoint& a, const PlanarPoint& b) {
    return HParabola(a, b);
}

/// Z = tan(theta/2) = p2 / (1 + p1). Throws ChartExcluded for half-turns.
Rational z_of(const Rotation& t);

XYZPoint lift_rotation(const Rotation& t);

/// True iff t maps h.a to h.b; exact and defined for every rotation,
/// half-turns included.
inline bool incident(const Rotation& t, const HParabola& h) {
    return apply_rotation(t, h.a()) == h.b();
}

/// Helix tangent direction at t in (xi, eta, theta) coordinates:
/// (a1 p2 + a2 p1, -a1 p1 + a2 p2, 1). Requires incident(t, h).
std::array<Rational, 3> tangent_direction(const HParabola& h, const Rotation& t);

/// Determinant test of three tangent directions at a common rotation; zero
/// iff the three source points are collinear.
Rational tangent_determinant(const std::array<Rational, 3>& t1,
                             const std::array<Rational, 3>& t2,
                             const std::array<Rational, 3>& t3);

/// The unique common rotation of two distinct parabolas, when it exists
/// (|ac| = |bd| and distinct sources). Throws SameParabola on h1 == h2.
std::optional<Rotation> parabola_intersection(const HParabola& h1, const HParabola& h2);

/// Two independent linear equations over (a1, a2, b1, b2); row layout is
/// (a1, a2, b1, b2, constant).
struct DualPlane {
    std::array<Rational, 5> eq1;
    std::array<Rational, 5> eq2;

    bool contains(const std::array<Rational, 4>& pt) const;
};

/// h |-> (a1, a2, b1, b2).
inline std::array<Rational, 4> dualize_parabola(const HParabola& h) {
    return {h.a().x, h.a().y, h.b().x, h.b().y};
}

/// t |-> the 2-plane of all dual points of parabolas through t.
/// Throws ChartExcluded for half-turns.
DualPlane dualize_rotation(const Rotation& t);

} // namespace rotlab
