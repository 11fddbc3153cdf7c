#include "rotlab/generators.hpp"

#include <random>
#include <set>

namespace rotlab {

PointSet grid(int w, int h) {
    if (w < 1 || h < 1) throw Error("grid: sizes must be >= 1");
    std::vector<PlanarPoint> pts;
    pts.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < h; ++j)
            pts.emplace_back(Rational(i), Rational(j));
    return PointSet(std::move(pts));
}

PointSet collinear_points(int s) {
    if (s < 1) throw Error("collinear_points: s must be >= 1");
    std::vector<PlanarPoint> pts;
    pts.reserve(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) pts.emplace_back(Rational(i), Rational(0));
    return PointSet(std::move(pts));
}

PointSet lower_bound_set(int s) {
    if (s < 1) throw Error("lower_bound_set: s must be >= 1");
    std::vector<PlanarPoint> pts;
    pts.reserve(static_cast<std::size_t>(4 * s));
    for (int i = 1; i <= s; ++i) pts.emplace_back(Rational(i), Rational(0));
    for (int i = 1; i <= s; ++i) pts.emplace_back(Rational(i), Rational(1));
    for (int i = 1; i <= 2 * s; ++i) pts.emplace_back(Rational(i, 2), Rational(1, 2));
    return PointSet(std::move(pts));
}

std::vector<LowerBoundRotation> lower_bound_rotations(int s) {
    if (s < 1) throw Error("lower_bound_rotations: s must be >= 1");
    std::vector<LowerBoundRotation> out;
    for (int a = 1; a <= s; ++a) {
        for (int b = 1; b <= s; ++b) {
            for (int c = 1; c <= s; ++c) {
                const int e = a + b - c;
                if (e < 1 || e > s) continue;
                const PlanarPoint src1{Rational(a), Rational(0)};
                const PlanarPoint src2{Rational(c), Rational(1)};
                const PlanarPoint dst1{Rational(b), Rational(0)};
                const PlanarPoint dst2{Rational(e), Rational(1)};
                const Rotation t = rotation_from_two_pairs(src1, src2, dst1, dst2);
                // Midpoint carry: ((a+c)/2, 1/2) -> ((a+2b-c)/2, 1/2).
                const PlanarPoint mid{Rational(a + c, 2), Rational(1, 2)};
                const PlanarPoint mid_img{Rational(a + 2 * b - c, 2), Rational(1, 2)};
                if (apply_rotation(t, mid) != mid_img)
                    throw Error("lower_bound_rotations: midpoint property violated");
                out.push_back({a, b, c, t});
            }
        }
    }
    return out;
}

PointSet random_points(int s, std::uint64_t seed, long coord_range, long denom_bound) {
    if (s < 1) throw Error("random_points: s must be >= 1");
    if (coord_range < 1 || denom_bound < 1)
        throw Error("random_points: bounds must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den_dist(1, denom_bound);
    std::set<PlanarPoint> seen;
    std::vector<PlanarPoint> pts;
    while (static_cast<int>(pts.size()) < s) {
        const long dx = den_dist(rng), dy = den_dist(rng);
        std::uniform_int_distribution<long> nx(-coord_range * dx, coord_range * dx);
        std::uniform_int_distribution<long> ny(-coord_range * dy, coord_range * dy);
        PlanarPoint p{Rational(nx(rng), dx), Rational(ny(rng), dy)};
        if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    return PointSet(std::move(pts));
}

PlanarPoint rational_unit_vector(const Rational& t) {
    const Rational t2 = sq(t);
    const Rational w = (Rational(1) + t2).reciprocal();
    return {(Rational(1) - t2) * w, Rational(2) * t * w};
}

namespace {

bool frame_is_generic(const PointSet& s) {
    std::set<Rational> xs;
    for (const auto& p : s) {
        if (!xs.insert(p.x).second) return false; // shared x-coordinate
    }
    for (const auto& p : s) {
        if (s.contains(-p)) return false; // pair (a, b) with b = -a (a = 0 included)
    }
    return true;
}

} // namespace

std::pair<PointSet, Rotation> generic_reframe(const PointSet& s, std::uint64_t seed) {
    if (frame_is_generic(s)) return {s, Rotation()};

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-97, 97);
    std::uniform_int_distribution<long> den(1, 97);
    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const PlanarPoint p = rational_unit_vector(Rational(num(rng), den(rng)));
        // A rotation alone cannot break an antipodal pair (b = -a is
        // invariant under z -> pz), so a translation is always included.
        const PlanarPoint q{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        const Rotation frame(p, q);
        std::vector<PlanarPoint> image;
        image.reserve(s.size());
        for (const auto& pt : s) image.push_back(apply_rotation(frame, pt));
        PointSet candidate(std::move(image));
        if (frame_is_generic(candidate)) return {std::move(candidate), frame};
    }
    throw ReframeFailed("generic_reframe: no generic frame found");
}

PointSet generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Grid: return grid(spec.cols, spec.rows);
        case Family::Random:
            return random_points(spec.size, spec.seed, spec.coord_range, spec.denom_bound);
        case Family::Collinear: return collinear_points(spec.size);
        case Family::LowerBound: return lower_bound_set(spec.size);
    }
    throw Error("generate: unknown family");
}

} // namespace rotlab
