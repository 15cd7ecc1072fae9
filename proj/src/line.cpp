#include "dpchains/line.hpp"

#include <utility>

#include "dpchains/errors.hpp"

namespace dpchains {

namespace {

void require_2d(const Point& p, const char* what) {
    if (p.dim() != 2) {
        throw DimensionMismatchError(std::string(what) + " requires 2D points");
    }
}

void require_nonzero(const Point& p, const char* what) {
    if (p.is_origin()) {
        throw OriginError(std::string(what) + ": the origin is not a valid base point");
    }
}

}  // namespace

LineKey LineKey::normalized(Scalar a, Scalar b, Scalar c) {
    if (a == 0 && b == 0) {
        throw ValidationError("line coefficients (a, b) must not both be zero");
    }
    const Scalar divisor = (a != 0) ? a : b;
    return LineKey{a / divisor, b / divisor, c / divisor};
}

bool LineKey::contains(const Point& p) const {
    require_2d(p, "LineKey::contains");
    return a * p[0] + b * p[1] == c;
}

std::string to_string(const LineKey& line) {
    return scalar_to_string(line.a) + "*x + " + scalar_to_string(line.b) +
           "*y = " + scalar_to_string(line.c);
}

std::size_t hash_value(const LineKey& line) {
    std::size_t h = hash_value(line.a);
    h ^= hash_value(line.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= hash_value(line.c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

LineKey alpha_line(const Point& a, const Scalar& alpha) {
    require_2d(a, "alpha_line");
    require_nonzero(a, "alpha_line");
    return LineKey::normalized(a[0], a[1], alpha);
}

LineKey canonical_line(const Point& p, const Point& q) {
    require_2d(p, "canonical_line");
    require_2d(q, "canonical_line");
    if (p == q) {
        throw ValidationError("canonical_line requires two distinct points");
    }
    // Normal of the direction q - p, offset through p.
    const Scalar a = q[1] - p[1];
    const Scalar b = p[0] - q[0];
    return LineKey::normalized(a, b, a * p[0] + b * p[1]);
}

bool same_radial_line(const Point& p, const Point& q) {
    require_2d(p, "same_radial_line");
    require_2d(q, "same_radial_line");
    require_nonzero(p, "same_radial_line");
    require_nonzero(q, "same_radial_line");
    return p[0] * q[1] - p[1] * q[0] == 0;
}

Point intersect_alpha_lines(const Point& a, const Scalar& alpha, const Point& c,
                            const Scalar& beta) {
    require_2d(a, "intersect_alpha_lines");
    require_2d(c, "intersect_alpha_lines");
    require_nonzero(a, "intersect_alpha_lines");
    require_nonzero(c, "intersect_alpha_lines");
    if (alpha == 0 || beta == 0) {
        throw ValidationError("intersect_alpha_lines requires nonzero targets");
    }
    // Solve a1*x + a2*y = alpha, c1*x + c2*y = beta by Cramer's rule.
    const Scalar det = a[0] * c[1] - a[1] * c[0];
    if (det == 0) {
        throw SameRadialLineError(
            "alpha-lines of points on one radial line do not meet in one point");
    }
    Scalar x = (alpha * c[1] - beta * a[1]) / det;
    Scalar y = (a[0] * beta - c[0] * alpha) / det;
    return Point(std::move(x), std::move(y));
}

}  // namespace dpchains
