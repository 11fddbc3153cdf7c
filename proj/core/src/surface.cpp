#include "rotlab/surface.hpp"

#include <algorithm>

namespace rotlab {

namespace {

UniPoly quad_poly(const QuadCoeffs& q) {
    return UniPoly({q[2], q[1], q[0]});
}

// Pair-shaped quadratic coefficients, shared by Q1..Q4.
QuadCoeffs pair_x_coeffs(const PlanarPoint& a, const PlanarPoint& b) {
    return {a.x + b.x, Rational(2) * a.y, b.x - a.x};
}
QuadCoeffs pair_y_coeffs(const PlanarPoint& a, const PlanarPoint& b) {
    return {a.y + b.y, Rational(-2) * a.x, b.y - a.y};
}

// Primitive integer vector proportional to v, first nonzero component
// positive.
PlanarPoint canonical_direction(const PlanarPoint& v) {
    if (v.is_zero()) throw Error("canonical_direction: zero vector");
    const Integer l = lcm(v.x.den(), v.y.den());
    Rational x = v.x * Rational(l);
    Rational y = v.y * Rational(l);
    Integer g = gcd(x.num(), y.num());
    g = abs(g);
    Rational ginv = Rational(g).reciprocal();
    x = x * ginv;
    y = y * ginv;
    const int lead = x.is_zero() ? y.sign() : x.sign();
    if (lead < 0) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

} // namespace

std::pair<QuadCoeffs, QuadCoeffs> direction_quadratics(const PlanarPoint& d,
                                                       const PlanarPoint& d_img) {
    return {pair_x_coeffs(d, d_img), pair_y_coeffs(d, d_img)};
}

SpecialSurface::SpecialSurface(Rational lam, Rational mu, QuadCoeffs q3, QuadCoeffs q4,
                               SurfaceProvenance prov)
    : lam_(std::move(lam)), mu_(std::move(mu)), q3_(std::move(q3)), q4_(std::move(q4)),
      prov_(std::move(prov)) {
    if (lam_.is_zero() && mu_.is_zero())
        throw HalfTurnDegenerate("SpecialSurface: (lam, mu) = (0, 0)");
    free_ = e1() * quad_poly(q4_) - e2() * quad_poly(q3_);
    if (!free_.divisible_by(UniPoly({Rational(1), Rational(0), Rational(1)})))
        throw Error("SpecialSurface: free term not divisible by Z^2 + 1");
    if (!eval(lift_rotation(prov_.tau0)).is_zero())
        throw Error("SpecialSurface: base rotation not on the surface");
}

Rational SpecialSurface::eval(const XYZPoint& pt) const {
    return e2().eval(pt.z) * pt.x - e1().eval(pt.z) * pt.y + free_.eval(pt.z);
}

UniPoly SpecialSurface::restrict_to(const HParabola& h) const {
    return e2() * h.x_poly() - e1() * h.y_poly() + free_;
}

HParabola SpecialSurface::family_member(const Rational& t) const {
    const PlanarPoint src = prov_.a + scale(t, prov_.d);
    const PlanarPoint dst = b() + scale(t, prov_.d_img);
    return HParabola(src, dst);
}

std::vector<Rational> SpecialSurface::canonical_key() const {
    std::vector<Rational> v = {mu_, -lam_, -lam_, -mu_};
    for (int i = 3; i >= 0; --i) v.push_back(free_.coeff(i));

    Integer l(1);
    for (const auto& c : v) l = lcm(l, c.den());
    Integer g(0);
    for (auto& c : v) {
        c = c * Rational(l);
        g = gcd(g, c.num());
    }
    g = abs(g);
    int lead = 0;
    for (const auto& c : v) {
        if (!c.is_zero()) {
            lead = c.sign();
            break;
        }
    }
    if (lead < 0) g = -g;
    const Rational ginv = Rational(g).reciprocal();
    for (auto& c : v) c = c * ginv;
    return v;
}

bool SpecialSurface::same_surface(const SpecialSurface& o) const {
    return canonical_key() == o.canonical_key();
}

SpecialSurface surface_from_rotation_line(const Rotation& tau, const PlanarPoint& a,
                                          const PlanarPoint& d) {
    if (d.is_zero())
        throw Error("surface_from_rotation_line: zero direction");
    // (lam, mu) = (1 + p) d, proportional to u + v.
    const PlanarPoint one_plus_p{Rational(1) + tau.p().x, tau.p().y};
    const PlanarPoint lm = cmul(one_plus_p, d);
    if (lm.is_zero())
        throw HalfTurnDegenerate("surface_from_rotation_line: u + v = 0 (half-turn)");
    const PlanarPoint b = apply_rotation(tau, a);
    const PlanarPoint d_img = cmul(tau.p(), d);
    SurfaceProvenance prov{tau, a, d, d_img};
    return SpecialSurface(lm.x, lm.y, pair_x_coeffs(a, b), pair_y_coeffs(a, b),
                          std::move(prov));
}

bool contains_parabola(const SpecialSurface& sigma, const HParabola& h) {
    return sigma.restrict_to(h).is_zero();
}

CrossingResult crossings(const SpecialSurface& sigma, const HParabola& h) {
    const UniPoly cubic = sigma.restrict_to(h);
    CrossingResult out;
    if (cubic.is_zero()) {
        out.contained = true;
        return out;
    }
    if (cubic.degree() >= 1) out.roots = isolate_real_roots(cubic);
    if (out.roots.size() > 3)
        throw Error("crossings: more than three roots of a cubic");
    return out;
}

AntiRotation anti_rotation_of(const SpecialSurface& sigma) {
    const PlanarPoint lm{sigma.lam(), sigma.mu()};
    const PlanarPoint r = scale(norm_sq(lm).reciprocal(), cmul(lm, lm));
    // phi(a + t d) = b + t d_img for every t; solve the shift at t = 0.
    const PlanarPoint q = sigma.b() - cmul(r, conj(sigma.provenance().a));
    return AntiRotation(r, q);
}

SurfaceSets surface_sets(const SpecialSurface& sigma, const PointSet& s) {
    SurfaceSets out;
    for (const auto& p : s) {
        bool matched = false;
        for (const auto& q : s) {
            if (q == -p) continue; // no parabola exists for this pair
            if (!contains_parabola(sigma, HParabola(p, q))) continue;
            if (matched)
                throw Error("surface_sets: two partners for one source point");
            out.sources.push_back(p);
            out.targets.push_back(q);
            matched = true;
        }
    }
    return out;
}

long long count_containments(const std::vector<HParabola>& parabolas,
                             const std::vector<SpecialSurface>& surfaces) {
    long long n = 0;
    for (const auto& sigma : surfaces)
        for (const auto& h : parabolas)
            if (contains_parabola(sigma, h)) ++n;
    return n;
}

SurfaceParam surface_param(const SpecialSurface& sigma) {
    const AntiRotation phi = anti_rotation_of(sigma);
    const PlanarPoint w = canonical_direction({sigma.lam(), sigma.mu()});
    const PlanarPoint n{-w.y, w.x};

    // phi(0) = q, so q/2 is a midpoint of a (point, image) pair and lies on
    // the axis. The glide is the direction component of phi o phi.
    const PlanarPoint axis_point = scale(Rational(1, 2), phi.q());
    const PlanarPoint glide =
        scale(Rational(1, 2), phi.q() + cmul(phi.p(), conj(phi.q())));
    if (!cross(glide, w).is_zero())
        throw Error("surface_param: glide not parallel to the axis");

    SurfaceParam out;
    out.direction = w;
    out.normal = n;
    out.offset = dot(n, axis_point);
    out.delta_component = dot(glide, w) / norm_sq(w);
    return out;
}

std::optional<std::array<Rational, 3>> to_slope_intercept(const SurfaceParam& p) {
    if (p.normal.y.is_zero()) return std::nullopt; // vertical axis
    const Rational alpha = -(p.normal.x / p.normal.y);
    const Rational beta = p.offset / p.normal.y;
    return std::array<Rational, 3>{alpha, beta, p.delta_component};
}

} // namespace rotlab
