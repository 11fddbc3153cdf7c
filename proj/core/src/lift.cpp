#include "rotlab/lift.hpp"

namespace rotlab {

HParabola::HParabola(PlanarPoint a, PlanarPoint b) : a_(std::move(a)), b_(std::move(b)) {
    if (b_ == -a_)
        throw DegenerateParabola("HParabola: b == -a degenerates to a line");
    const Rational two(2);
    xc_ = {a_.x + b_.x, two * a_.y, b_.x - a_.x};
    yc_ = {a_.y + b_.y, -(two * a_.x), b_.y - a_.y};
}

Rational z_of(const Rotation& t) {
    if (t.is_half_turn_frame())
        throw ChartExcluded("z_of: theta = pi lies outside the chart");
    return t.p().y / (Rational(1) + t.p().x);
}

XYZPoint lift_rotation(const Rotation& t) {
    const Rational z = z_of(t);
    const Rational w = Rational(1) + sq(z);
    return {t.q().x * w, t.q().y * w, z};
}

std::array<Rational, 3> tangent_direction(const HParabola& h, const Rotation& t) {
    if (!incident(t, h))
        throw NotIncident("tangent_direction: rotation not on parabola");
    const Rational& a1 = h.a().x;
    const Rational& a2 = h.a().y;
    const Rational& c = t.p().x; // cos theta
    const Rational& s = t.p().y; // sin theta
    return {a1 * s + a2 * c, -(a1 * c) + a2 * s, Rational(1)};
}

Rational tangent_determinant(const std::array<Rational, 3>& t1,
                             const std::array<Rational, 3>& t2,
                             const std::array<Rational, 3>& t3) {
    return t1[0] * (t2[1] * t3[2] - t2[2] * t3[1]) -
           t1[1] * (t2[0] * t3[2] - t2[2] * t3[0]) +
           t1[2] * (t2[0] * t3[1] - t2[1] * t3[0]);
}

std::optional<Rotation> parabola_intersection(const HParabola& h1, const HParabola& h2) {
    if (h1 == h2)
        throw SameParabola("parabola_intersection: identical parabolas");
    if (h1.a() == h2.a())
        return std::nullopt; // one source cannot map to two targets
    if (squared_distance(h1.a(), h2.a()) != squared_distance(h1.b(), h2.b()))
        return std::nullopt;
    return rotation_from_two_pairs(h1.a(), h2.a(), h1.b(), h2.b());
}

bool DualPlane::contains(const std::array<Rational, 4>& pt) const {
    for (const auto* eq : {&eq1, &eq2}) {
        Rational acc = (*eq)[4];
        for (int i = 0; i < 4; ++i) acc += (*eq)[i] * pt[i];
        if (!acc.is_zero()) return false;
    }
    return true;
}

DualPlane dualize_rotation(const Rotation& t) {
    const XYZPoint l = lift_rotation(t);
    const Rational z2 = sq(l.z);
    const Rational two_z = Rational(2) * l.z;
    // (a1+b1)Z^2 + 2 a2 Z + (b1-a1) - X = 0
    // (a2+b2)Z^2 - 2 a1 Z + (b2-a2) - Y = 0
    DualPlane d;
    d.eq1 = {z2 - Rational(1), two_z, z2 + Rational(1), Rational(0), -l.x};
    d.eq2 = {-two_z, z2 - Rational(1), Rational(0), z2 + Rational(1), -l.y};
    return d;
}

} // namespace rotlab
