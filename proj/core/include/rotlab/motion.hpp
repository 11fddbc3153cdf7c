#pragma once

/**
 * @file motion.hpp
 * @brief Rigid motions of the plane over the rationals.
 *
 * A Rotation is the orientation-preserving motion z |-> p z + q with |p| = 1;
 * it covers pure translations (p = 1) and half-turns (p = -1). Angles are
 * never materialized: a rotation arising from a rational point quadruple has
 * rational p = (cos t, sin t), so exact equality and hashing work on the
 * 4-tuple (p, q) alone.
 *
 * An AntiRotation is the orientation-reversing motion z |-> p conj(z) + q.
 * The classical form conj(p'z + q') equals ours with p = conj(p'),
 * q = conj(q'); see AntiRotation::from_conjugated_form.
 */

#include <cstddef>

#include "rotlab/point.hpp"

namespace rotlab {

namespace detail {
inline void require_unit(const PlanarPoint& p, const char* what) {
    if (norm_sq(p) != Rational(1))
        throw UnitNormViolation(std::string(what) + ": |p|^2 != 1");
}
} // namespace detail

class Rotation {
public:
    /// Identity motion.
    Rotation() : p_(Rational(1), Rational(0)), q_(Rational(0), Rational(0)) {}

    Rotation(PlanarPoint p, PlanarPoint q) : p_(std::move(p)), q_(std::move(q)) {
        detail::require_unit(p_, "Rotation");
    }

    const PlanarPoint& p() const { return p_; }
    const PlanarPoint& q() const { return q_; }

    bool is_identity() const {
        return p_.x == Rational(1) && p_.y.is_zero() && q_.is_zero();
    }

    /// True iff p = (-1, 0); such rotations exist but lie outside the
    /// tan-half-angle chart.
    bool is_half_turn_frame() const {
        return p_.x == Rational(-1) && p_.y.is_zero();
    }

    bool operator==(const Rotation& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const Rotation& o) const { return !(*this == o); }
    bool operator<(const Rotation& o) const {
        if (p_ != o.p_) return p_ < o.p_;
        return q_ < o.q_;
    }

    std::size_t hash() const {
        std::size_t h = p_.x.hash();
        auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        mix(p_.y.hash());
        mix(q_.x.hash());
        mix(q_.y.hash());
        return h;
    }

private:
    PlanarPoint p_;
    PlanarPoint q_;
};

class AntiRotation {
public:
    AntiRotation(PlanarPoint p, PlanarPoint q) : p_(std::move(p)), q_(std::move(q)) {
        detail::require_unit(p_, "AntiRotation");
    }

    /// Conversion from the z |-> conj(p z + q) parametrization.
    static AntiRotation from_conjugated_form(const PlanarPoint& p, const PlanarPoint& q) {
        return AntiRotation(conj(p), conj(q));
    }

    const PlanarPoint& p() const { return p_; }
    const PlanarPoint& q() const { return q_; }

    bool operator==(const AntiRotation& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const AntiRotation& o) const { return !(*this == o); }

private:
    PlanarPoint p_;
    PlanarPoint q_;
};

inline PlanarPoint apply_rotation(const Rotation& t, const PlanarPoint& z) {
    return cmul(t.p(), z) + t.q();
}

inline PlanarPoint apply_anti_rotation(const AntiRotation& f, const PlanarPoint& z) {
    return cmul(f.p(), conj(z)) + f.q();
}

/// The unique rotation with t(a) = a2 and t(b) = b2.
/// Requires a != b and |ab|^2 == |a2 b2|^2 exactly.
Rotation rotation_from_two_pairs(const PlanarPoint& a, const PlanarPoint& b,
                                 const PlanarPoint& a2, const PlanarPoint& b2);

// Composition acts right-to-left: compose(f, g)(z) = f(g(z)).
inline Rotation compose(const Rotation& f, const Rotation& g) {
    return Rotation(cmul(f.p(), g.p()), cmul(f.p(), g.q()) + f.q());
}
inline AntiRotation compose(const Rotation& f, const AntiRotation& g) {
    return AntiRotation(cmul(f.p(), g.p()), cmul(f.p(), g.q()) + f.q());
}
inline AntiRotation compose(const AntiRotation& f, const Rotation& g) {
    return AntiRotation(cmul(f.p(), conj(g.p())), cmul(f.p(), conj(g.q())) + f.q());
}
inline Rotation compose(const AntiRotation& f, const AntiRotation& g) {
    return Rotation(cmul(f.p(), conj(g.p())), cmul(f.p(), conj(g.q())) + f.q());
}

inline Rotation inverse(const Rotation& t) {
    const PlanarPoint pinv = conj(t.p());
    return Rotation(pinv, -cmul(pinv, t.q()));
}

} // namespace rotlab

template <>
struct std::hash<rotlab::Rotation> {
    std::size_t operator()(const rotlab::Rotation& t) const noexcept {
        return t.hash();
    }
};
