#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dpchains/scalar.hpp"

namespace dpchains {

// A point in Q^d, d >= 2. Immutable after construction.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Scalar> coords);
    Point(Scalar x, Scalar y);
    Point(Scalar x, Scalar y, Scalar z);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Scalar& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_origin() const;

    bool operator==(const Point&) const = default;

private:
    std::vector<Scalar> coords_;
};

// Exact inner product; throws DimensionMismatchError on unequal dimensions.
Scalar dot(const Point& a, const Point& b);

// Exact |a - b|^2.
Scalar squared_distance(const Point& a, const Point& b);

std::string to_string(const Point& p);

std::size_t hash_value(const Point& p);

struct PointHash {
    std::size_t operator()(const Point& p) const { return hash_value(p); }
};

}  // namespace dpchains
