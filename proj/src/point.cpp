#include "dpchains/point.hpp"

#include "dpchains/errors.hpp"

namespace dpchains {

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) {
        throw ValidationError("points need dimension >= 2");
    }
}

Point::Point(Scalar x, Scalar y) {
    coords_.reserve(2);
    coords_.push_back(std::move(x));
    coords_.push_back(std::move(y));
}

Point::Point(Scalar x, Scalar y, Scalar z) {
    coords_.reserve(3);
    coords_.push_back(std::move(x));
    coords_.push_back(std::move(y));
    coords_.push_back(std::move(z));
}

bool Point::is_origin() const {
    for (const Scalar& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

Scalar dot(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError("dot product requires equal dimensions (" +
                                     std::to_string(a.dim()) + " vs " +
                                     std::to_string(b.dim()) + ")");
    }
    Scalar acc(0);
    for (int i = 0; i < a.dim(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

Scalar squared_distance(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError("squared distance requires equal dimensions");
    }
    Scalar acc(0);
    for (int i = 0; i < a.dim(); ++i) {
        Scalar diff = a[i] - b[i];
        acc += diff * diff;
    }
    return acc;
}

std::string to_string(const Point& p) {
    std::string out = "(";
    for (int i = 0; i < p.dim(); ++i) {
        if (i > 0) out += ", ";
        out += scalar_to_string(p[i]);
    }
    out += ")";
    return out;
}

std::size_t hash_value(const Point& p) {
    std::size_t h = static_cast<std::size_t>(p.dim());
    for (int i = 0; i < p.dim(); ++i) {
        h ^= hash_value(p[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace dpchains
