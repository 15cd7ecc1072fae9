#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dpchains/point.hpp"

namespace dpchains {

// Where a set came from: a generator name plus its parameters, or "external"
// for sets loaded from files the tool did not produce.
struct Provenance {
    std::string generator = "external";
    std::vector<std::pair<std::string, std::string>> params;

    void add(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
};

// Named, ordered, duplicate-free collection of points of one dimension.
struct PointSet {
    std::string name;
    int dim = 2;
    std::vector<Point> points;
    Provenance provenance;

    int size() const { return static_cast<int>(points.size()); }

    // Uniform dimension (>= 2), no duplicates. Duplicates are reported with
    // the indices of the offending pair.
    void validate() const;
};

}  // namespace dpchains
