#include "rotlab/point.hpp"

#include <set>

namespace rotlab {

PointSet::PointSet(std::vector<PlanarPoint> pts) : points_(std::move(pts)) {
    std::set<PlanarPoint> seen;
    for (const auto& p : points_) {
        if (!seen.insert(p).second)
            throw DuplicatePoint("PointSet: duplicate point (" + p.x.to_string() +
                                 ", " + p.y.to_string() + ")");
    }
}

bool PointSet::contains(const PlanarPoint& p) const {
    for (const auto& q : points_)
        if (q == p) return true;
    return false;
}

} // namespace rotlab
