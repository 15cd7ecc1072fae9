#include "dpchains/point_set.hpp"

#include <string>
#include <unordered_map>

#include "dpchains/errors.hpp"

namespace dpchains {

void PointSet::validate() const {
    if (dim < 2) {
        throw ValidationError("point set '" + name + "' has dimension < 2");
    }
    std::unordered_map<Point, int, PointHash> seen;
    seen.reserve(points.size());
    for (int i = 0; i < size(); ++i) {
        const Point& p = points[static_cast<std::size_t>(i)];
        if (p.dim() != dim) {
            throw DimensionMismatchError("point " + std::to_string(i) + " of '" + name +
                                         "' has dimension " + std::to_string(p.dim()) +
                                         ", set declares " + std::to_string(dim));
        }
        auto [it, inserted] = seen.emplace(p, i);
        if (!inserted) {
            throw DuplicatePointError("duplicate point " + to_string(p) + " at indices " +
                                          std::to_string(it->second) + " and " +
                                          std::to_string(i),
                                      it->second, i);
        }
    }
}

}  // namespace dpchains
