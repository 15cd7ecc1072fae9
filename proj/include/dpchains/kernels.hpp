#pragma once

#include <unordered_map>
#include <vector>

#include "dpchains/line.hpp"
#include "dpchains/point_set.hpp"
#include "dpchains/scalar.hpp"

// Data-parallel inner loops, OpenMP-parallelized. Every kernel has a plain
// serial twin in kernels::serial with identical results; the test suite
// checks the pairs against each other and tools/bench compares their speed.
// All results are exact, so parallel reduction order never changes a value.

namespace dpchains::kernels {

// Symmetric dot adjacency for one target: neighbors[i] lists every j
// (including j = i when dot(P_i, P_i) = alpha) with dot(P_i, P_j) = alpha,
// ascending.
std::vector<std::vector<int>> dot_adjacency(const PointSet& e, const Scalar& alpha);

// Multiplicity of every value realized as dot(P_i, P_j) over ordered pairs
// with i != j.
std::unordered_map<Scalar, long long, ScalarHash> pair_dot_histogram(const PointSet& e);

// Ordered pairs (i, j), i != j, with dot(P_i, P_j) = alpha.
long long pair_count_with_dot(const PointSet& e, const Scalar& alpha);

// One layer of with-repeats path counting: out[q] = sum of in[p] over
// p adjacent to q.
std::vector<BigInt> dp_step(const std::vector<std::vector<int>>& adjacency,
                            const std::vector<BigInt>& in);

// Exact minimum of |P - Q|^2 over distinct pairs. Uses a double-precision
// prescreen to skip pairs that cannot be minimal, then compares the
// candidates exactly.
Scalar min_squared_separation(const PointSet& e);

// Sum over unordered pairs of (|P - Q|^2)^(-s/2); squared distances are
// exact, the power and sum are floating point.
double energy_sum(const PointSet& e, double s);

// Point-line incidences against a deduplicated 2D line family.
long long incidence_count(const PointSet& e, const std::vector<LineKey>& lines);

// Most populous line through any point of e (any dimension): for each anchor,
// remaining points are grouped by canonical direction. Returns the member
// indices of the best line, ascending. Ties break toward the smallest anchor
// index, then the earliest direction class.
std::vector<int> richest_line_members(const PointSet& e);

namespace serial {

std::vector<std::vector<int>> dot_adjacency(const PointSet& e, const Scalar& alpha);
std::unordered_map<Scalar, long long, ScalarHash> pair_dot_histogram(const PointSet& e);
long long pair_count_with_dot(const PointSet& e, const Scalar& alpha);
std::vector<BigInt> dp_step(const std::vector<std::vector<int>>& adjacency,
                            const std::vector<BigInt>& in);
Scalar min_squared_separation(const PointSet& e);
double energy_sum(const PointSet& e, double s);
long long incidence_count(const PointSet& e, const std::vector<LineKey>& lines);
std::vector<int> richest_line_members(const PointSet& e);

}  // namespace serial

}  // namespace dpchains::kernels
