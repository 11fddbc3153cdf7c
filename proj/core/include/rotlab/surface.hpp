#pragma once

/**
 * @file surface.hpp
 * @brief Special surfaces: the ruled cubics swept by parabola families.
 *
 * A flat rotation tau mapping the line a + t d onto b + t d' (d' = p d)
 * determines the surface
 *
 *     E2(Z) X - E1(Z) Y + (E1 Q4 - E2 Q3)(Z) = 0,
 *
 * with E1 = lam Z + mu, E2 = mu Z - lam, where (lam, mu) = (1+p) d is a
 * rational representative of the bisector direction u+v. All identities that
 * the literature states with unit u, v are used here in scale-free form, so
 * everything stays rational.
 *
 * The parabolas contained in the surface are exactly the pairs (c, phi(c))
 * of one anti-rotation phi: a reflection about the axis line through the
 * midpoints, followed by a glide along it.
 */

#include <optional>
#include <utility>
#include <vector>

#include "rotlab/lift.hpp"
#include "rotlab/point.hpp"
#include "rotlab/sturm.hpp"

namespace rotlab {

struct SurfaceProvenance {
    Rotation tau0;
    PlanarPoint a;     // reference point on the source line
    PlanarPoint d;     // source direction (scale-free)
    PlanarPoint d_img; // p * d, direction of the image line
};

class SpecialSurface {
public:
    SpecialSurface(Rational lam, Rational mu, QuadCoeffs q3, QuadCoeffs q4,
                   SurfaceProvenance prov);

    const Rational& lam() const { return lam_; }
    const Rational& mu() const { return mu_; }
    const QuadCoeffs& q3() const { return q3_; }
    const QuadCoeffs& q4() const { return q4_; }
    const SurfaceProvenance& provenance() const { return prov_; }

    /// lam Z + mu.
    UniPoly e1() const { return UniPoly({mu_, lam_}); }
    /// mu Z - lam.
    UniPoly e2() const { return UniPoly({-lam_, mu_}); }
    /// The free cubic E1 Q4 - E2 Q3; divisible by Z^2 + 1.
    const UniPoly& free_cubic() const { return free_; }

    /// tau0(a), the reference point on the image line.
    PlanarPoint b() const { return apply_rotation(prov_.tau0, prov_.a); }

    Rational eval(const XYZPoint& pt) const;

    /// Substitute the parabola's coordinate quadratics; the result is the
    /// cubic in Z whose zeros are the crossings.
    UniPoly restrict_to(const HParabola& h) const;

    /// Family member h_{a + t d, b + t d_img}.
    HParabola family_member(const Rational& t) const;

    /// Content-free, sign-fixed coefficient vector of the full cubic
    /// polynomial; equal keys mean equal zero sets.
    std::vector<Rational> canonical_key() const;
    bool same_surface(const SpecialSurface& o) const;

private:
    Rational lam_;
    Rational mu_;
    QuadCoeffs q3_;
    QuadCoeffs q4_;
    UniPoly free_;
    SurfaceProvenance prov_;
};

/// Build the surface swept by the parabolas h_{a+td, tau(a)+t(pd)}.
/// Throws HalfTurnDegenerate when (1+p) d = 0 (u + v = 0).
SpecialSurface surface_from_rotation_line(const Rotation& tau, const PlanarPoint& a,
                                          const PlanarPoint& d);

bool contains_parabola(const SpecialSurface& sigma, const HParabola& h);

struct CrossingResult {
    bool contained = false;
    /// Distinct real crossing parameters Z; at most three. Empty when
    /// contained.
    std::vector<RealRoot> roots;
};

CrossingResult crossings(const SpecialSurface& sigma, const HParabola& h);

/// The anti-rotation phi with: h_{c,d} contained in sigma iff phi(c) = d.
/// Reflection part (lam + i mu)^2 / (lam^2 + mu^2), translation solved from
/// the t = 0 family member.
AntiRotation anti_rotation_of(const SpecialSurface& sigma);

/// The matched subsets A -> B of S paired by containment; entries are
/// aligned (sources[i] maps to targets[i]).
struct SurfaceSets {
    std::vector<PlanarPoint> sources;
    std::vector<PlanarPoint> targets;
};

SurfaceSets surface_sets(const SpecialSurface& sigma, const PointSet& s);

/// Exact number of (parabola, surface) containment pairs, by the naive
/// double loop.
long long count_containments(const std::vector<HParabola>& parabolas,
                             const std::vector<SpecialSurface>& surfaces);

/// Axis line of the anti-rotation in normal form plus glide component.
/// The axis is {z : normal . z = offset}; the glide vector is
/// delta_component * direction. Canonical scaling: direction is the
/// primitive integer vector proportional to (lam, mu) with its first
/// nonzero component positive, and normal is its 90-degree rotation.
struct SurfaceParam {
    PlanarPoint direction; // canonical primitive axis direction (prop. to (lam, mu))
    PlanarPoint normal;    // 90-degree rotation of direction
    Rational offset;       // axis line: normal . z = offset
    Rational delta_component; // glide = delta_component * direction

    bool operator==(const SurfaceParam& o) const {
        return direction == o.direction && normal == o.normal &&
               offset == o.offset && delta_component == o.delta_component;
    }
};

SurfaceParam surface_param(const SpecialSurface& sigma);

/// (alpha, beta, delta) with the axis written y = alpha x + beta; empty for
/// a vertical axis.
std::optional<std::array<Rational, 3>> to_slope_intercept(const SurfaceParam& p);

/// The quadratics Q1, Q2 built from a direction pair (d, d_img); both vanish
/// at Z0 = z_of(tau0) for every valid construction.
std::pair<QuadCoeffs, QuadCoeffs> direction_quadratics(const PlanarPoint& d,
                                                       const PlanarPoint& d_img);

} // namespace rotlab
