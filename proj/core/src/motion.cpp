#include "rotlab/motion.hpp"

namespace rotlab {

Rotation rotation_from_two_pairs(const PlanarPoint& a, const PlanarPoint& b,
                                 const PlanarPoint& a2, const PlanarPoint& b2) {
    if (a == b)
        throw DegeneratePair("rotation_from_two_pairs: a == b");
    const Rational d = squared_distance(a, b);
    if (d != squared_distance(a2, b2))
        throw DistanceMismatch("rotation_from_two_pairs: |ab|^2 != |a'b'|^2");

    // p = (b'-a') conj(b-a) / |b-a|^2, q = a' - p a.
    const PlanarPoint diff = b - a;
    PlanarPoint p = cmul(b2 - a2, conj(diff));
    const Rational inv = d.reciprocal();
    p = scale(inv, p);
    const PlanarPoint q = a2 - cmul(p, a);
    return Rotation(p, q); // constructor asserts |p|^2 == 1
}

} // namespace rotlab
