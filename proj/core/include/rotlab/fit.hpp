#pragma once

/**
 * @file fit.hpp
 * @brief Exact vanishing-polynomial interpolation.
 *
 * For m points a nonzero polynomial of degree d vanishing on all of them
 * exists whenever C(d+3, 3) > m: the evaluation matrix is wider than tall,
 * so its nullspace is nontrivial. The fit takes the least such d and
 * extracts one exact nullspace vector by fraction-free elimination.
 */

#include <vector>

#include "rotlab/tripoly.hpp"

namespace rotlab {

/// Least d with C(d+3, 3) > m.
int fit_degree_for(std::size_t point_count);

/// Desk-scale cap on fit_vanishing input size.
inline constexpr std::size_t kMaxFitPoints = 120;

/// A nonzero TriPoly of degree <= fit_degree_for(m) vanishing on every
/// input point. Points must be pairwise distinct, at most kMaxFitPoints of
/// them. The output is re-verified against every input before returning.
/// The nullspace vector is not canonical; any exact one is valid.
TriPoly fit_vanishing(const std::vector<XYZPoint>& points);

} // namespace rotlab
