#pragma once

/**
 * @file point.hpp
 * @brief Exact planar points and point sets.
 *
 * A PlanarPoint doubles as a complex number x + iy; the complex product is
 * what rigid motions are built from, so it lives here as cmul/conj.
 */

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rotlab/rational.hpp"

namespace rotlab {

struct PlanarPoint {
    Rational x;
    Rational y;

    PlanarPoint() = default;
    PlanarPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool operator==(const PlanarPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const PlanarPoint& o) const { return !(*this == o); }
    bool operator<(const PlanarPoint& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }

    PlanarPoint operator+(const PlanarPoint& o) const { return {x + o.x, y + o.y}; }
    PlanarPoint operator-(const PlanarPoint& o) const { return {x - o.x, y - o.y}; }
    PlanarPoint operator-() const { return {-x, -y}; }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

/// Complex product (x1 + iy1)(x2 + iy2).
inline PlanarPoint cmul(const PlanarPoint& a, const PlanarPoint& b) {
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

inline PlanarPoint conj(const PlanarPoint& a) { return {a.x, -a.y}; }

inline PlanarPoint scale(const Rational& s, const PlanarPoint& a) {
    return {s * a.x, s * a.y};
}

/// |a|^2 = a * conj(a), exact.
inline Rational norm_sq(const PlanarPoint& a) { return sq(a.x) + sq(a.y); }

inline Rational dot(const PlanarPoint& a, const PlanarPoint& b) {
    return a.x * b.x + a.y * b.y;
}

/// z-component of a x b; zero iff a, b parallel.
inline Rational cross(const PlanarPoint& a, const PlanarPoint& b) {
    return a.x * b.y - a.y * b.x;
}

inline Rational squared_distance(const PlanarPoint& a, const PlanarPoint& b) {
    return sq(a.x - b.x) + sq(a.y - b.y);
}

/// Exact sign-free collinearity: det[[a,1],[b,1],[c,1]] == 0.
inline bool collinear(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
    return cross(b - a, c - a).is_zero();
}

/// Twice the signed area of triangle abc; sign gives orientation.
inline Rational orientation(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
    return cross(b - a, c - a);
}

/// Ordered list of pairwise-distinct points.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<PlanarPoint> pts);
    PointSet(std::initializer_list<PlanarPoint> pts)
        : PointSet(std::vector<PlanarPoint>(pts)) {}

    const std::vector<PlanarPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const PlanarPoint& operator[](std::size_t i) const { return points_[i]; }
    bool contains(const PlanarPoint& p) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool operator==(const PointSet& o) const { return points_ == o.points_; }

private:
    std::vector<PlanarPoint> points_;
};

} // namespace rotlab
