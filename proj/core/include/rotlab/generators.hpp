#pragma once

/**
 * @file generators.hpp
 * @brief Point-set families used across tests and experiments.
 *
 * The lower-bound family places s points on y = 0, s on y = 1 and 2s
 * half-integer points on y = 1/2; every admissible triple (a, b, c) yields a
 * rotation taking (a,0) to (b,0) and (c,1) to (a+b-c,1), which also carries
 * the midpoint ((a+c)/2, 1/2) to ((a+2b-c)/2, 1/2). The family realizes
 * order-of-s^3 many distinct rotations of multiplicity at least 3.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "rotlab/motion.hpp"
#include "rotlab/point.hpp"

namespace rotlab {

enum class Family { Grid, Random, Collinear, LowerBound };

struct FamilySpec {
    Family family = Family::Grid;
    int rows = 1; // grid height
    int cols = 1; // grid width
    int size = 1; // s for random / collinear / lower-bound
    std::uint64_t seed = 0;
    long coord_range = 16; // random: coordinates lie in [-range, range]
    long denom_bound = 8;  // random: denominators bounded by this
};

PointSet generate(const FamilySpec& spec);

/// {(i, j) : 0 <= i < w, 0 <= j < h}.
PointSet grid(int w, int h);

/// {(i, 0) : 0 <= i < s}.
PointSet collinear_points(int s);

/// The 4s-point three-line construction.
PointSet lower_bound_set(int s);

struct LowerBoundRotation {
    int a, b, c;
    Rotation rotation;
};

/// All triples (a, b, c) in [1..s]^3 with a+b-c in [1..s], each with its
/// rotation. Raw triples; identity collisions are not removed.
std::vector<LowerBoundRotation> lower_bound_rotations(int s);

/// s distinct rational points, deterministic per seed.
PointSet random_points(int s, std::uint64_t seed, long coord_range, long denom_bound);

/// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)); unit norm, exactly.
PlanarPoint rational_unit_vector(const Rational& t);

/// Apply a random rational rigid motion until the image has no pair with
/// b = -a and no repeated x-coordinate; returns the image and the motion
/// used (identity when the input is already generic). Throws ReframeFailed
/// after a bounded number of attempts.
std::pair<PointSet, Rotation> generic_reframe(const PointSet& s, std::uint64_t seed);

} // namespace rotlab
