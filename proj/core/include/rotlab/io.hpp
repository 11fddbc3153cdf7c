#pragma once

/**
 * @file io.hpp
 * @brief Text formats. Rationals travel as "n" or "n/d" strings so every
 *        round trip is byte-exact; census reports deliberately carry no
 *        timing so identical inputs serialize identically at any worker
 *        count.
 */

#include <string>
#include <vector>

#include "rotlab/census.hpp"
#include "rotlab/point.hpp"
#include "rotlab/surface.hpp"
#include "rotlab/tripoly.hpp"

namespace rotlab {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// PointSet: {"points": [["x", "y"], ...]} or two-column CSV with header x,y.
std::string pointset_to_json_text(const PointSet& s);
PointSet pointset_from_json_text(const std::string& text);
std::string pointset_to_csv_text(const PointSet& s);
PointSet pointset_from_csv_text(const std::string& text);

/// Dispatch on the .json / .csv extension.
PointSet read_pointset_file(const std::string& path);
void write_pointset_file(const std::string& path, const PointSet& s);

// Census report and per-rotation rows.
std::string census_to_json_text(const RotationCensus& census);
std::string census_rows_to_csv_text(const RotationCensus& census);

// XYZ point lists: {"points": [["x", "y", "z"], ...]}.
std::string xyz_points_to_json_text(const std::vector<XYZPoint>& pts);
std::vector<XYZPoint> xyz_points_from_json_text(const std::string& text);

// TriPoly: list of [i, j, k, "coeff"] sorted lexicographically by exponent.
std::string tripoly_to_json_text(const TriPoly& p);
TriPoly tripoly_from_json_text(const std::string& text);

// Surface: {"lam", "mu", "q3", "q4", "free"}, quadratics and the free cubic
// with coefficients listed from the highest power down.
std::string surface_to_json_text(const SpecialSurface& sigma);

// HParabola: {"a": ["x", "y"], "b": ["x", "y"]}.
std::string parabola_to_json_text(const HParabola& h);
HParabola parabola_from_json_text(const std::string& text);

// DualPlane: two 5-vectors of rational strings.
std::string dual_plane_to_json_text(const DualPlane& d);

// Crossing report: contained flag plus roots; an exact rational root is
// {"z": ...}, an irrational one an isolating {"lo": ..., "hi": ...} pair.
std::string crossing_to_json_text(const CrossingResult& r);

// FamilySpec mirrors the CLI generate flags.
std::string familyspec_to_json_text(const FamilySpec& spec);
FamilySpec familyspec_from_json_text(const std::string& text);

} // namespace rotlab
