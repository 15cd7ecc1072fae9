#pragma once

#include <cstddef>
#include <string>

#include "dpchains/point.hpp"
#include "dpchains/scalar.hpp"

namespace dpchains {

// Affine line a*x + b*y = c in canonical form: the first nonzero of (a, b)
// equals 1. Two LineKeys compare equal iff they describe the same point set,
// which makes them usable as exact hash/map keys.
struct LineKey {
    Scalar a;
    Scalar b;
    Scalar c;

    // Scales (a, b, c) into canonical form; (a, b) = (0, 0) is rejected.
    static LineKey normalized(Scalar a, Scalar b, Scalar c);

    bool contains(const Point& p) const;

    bool operator==(const LineKey&) const = default;
};

std::string to_string(const LineKey& line);

std::size_t hash_value(const LineKey& line);

struct LineKeyHash {
    std::size_t operator()(const LineKey& l) const { return hash_value(l); }
};

// The line {B : A.B = alpha}, i.e. a1*x + a2*y = alpha. A must be a nonzero
// 2D point; it is perpendicular to A's radial line.
LineKey alpha_line(const Point& a, const Scalar& alpha);

// The unique line through two distinct 2D points.
LineKey canonical_line(const Point& p, const Point& q);

// True iff p and q (both nonzero, 2D) lie on one line through the origin,
// i.e. p1*q2 - p2*q1 = 0.
bool same_radial_line(const Point& p, const Point& q);

// The unique B with B.A = alpha and B.C = beta, solved exactly. Throws
// SameRadialLineError when the alpha-lines are parallel or coincident.
Point intersect_alpha_lines(const Point& a, const Scalar& alpha, const Point& c,
                            const Scalar& beta);

}  // namespace dpchains
