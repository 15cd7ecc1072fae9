#include "dpchains/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "dpchains/errors.hpp"

namespace dpchains::kernels {

namespace {

// Direction of q - p scaled so its first nonzero coordinate is 1; two pairs
// get the same key iff they span parallel lines.
Point direction_key(const Point& p, const Point& q) {
    std::vector<Scalar> diff(static_cast<std::size_t>(p.dim()));
    for (int i = 0; i < p.dim(); ++i) diff[static_cast<std::size_t>(i)] = q[i] - p[i];
    const Scalar* pivot = nullptr;
    for (const Scalar& c : diff) {
        if (c != 0) {
            pivot = &c;
            break;
        }
    }
    // p != q is guaranteed by duplicate-free sets.
    const Scalar scale = *pivot;
    for (Scalar& c : diff) c /= scale;
    return Point(std::move(diff));
}

std::vector<std::vector<double>> to_double_coords(const PointSet& e) {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(e.size()));
    for (int i = 0; i < e.size(); ++i) {
        const Point& p = e.points[static_cast<std::size_t>(i)];
        auto& row = out[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(p.dim()));
        for (int d = 0; d < p.dim(); ++d) row[static_cast<std::size_t>(d)] = to_double(p[d]);
    }
    return out;
}

struct AnchorBest {
    long long count = 0;  // points sharing the best direction, anchor excluded
    int first_j = -1;     // earliest co-linear index, for deterministic ties
};

AnchorBest best_direction_at(const PointSet& e, int anchor) {
    std::unordered_map<Point, std::pair<long long, int>, PointHash> classes;
    classes.reserve(static_cast<std::size_t>(e.size()));
    AnchorBest best;
    for (int j = 0; j < e.size(); ++j) {
        if (j == anchor) continue;
        Point key = direction_key(e.points[static_cast<std::size_t>(anchor)],
                                  e.points[static_cast<std::size_t>(j)]);
        auto [it, inserted] = classes.emplace(std::move(key), std::make_pair(0LL, j));
        it->second.first += 1;
        const auto& [count, first_j] = it->second;
        if (count > best.count || (count == best.count && first_j < best.first_j)) {
            best.count = count;
            best.first_j = first_j;
        }
    }
    return best;
}

}  // namespace

std::vector<std::vector<int>> dot_adjacency(const PointSet& e, const Scalar& alpha) {
    const int n = e.size();
    std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        auto& row = neighbors[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            if (dot(e.points[static_cast<std::size_t>(i)],
                    e.points[static_cast<std::size_t>(j)]) == alpha) {
                row.push_back(j);
            }
        }
    }
    return neighbors;
}

std::unordered_map<Scalar, long long, ScalarHash> pair_dot_histogram(const PointSet& e) {
    const int n = e.size();
    const int threads = omp_get_max_threads();
    std::vector<std::unordered_map<Scalar, long long, ScalarHash>> partial(
        static_cast<std::size_t>(threads));
#pragma omp parallel
    {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                local[dot(e.points[static_cast<std::size_t>(i)],
                          e.points[static_cast<std::size_t>(j)])] += 1;
            }
        }
    }
    std::unordered_map<Scalar, long long, ScalarHash> merged;
    for (auto& part : partial) {
        for (auto& [value, count] : part) merged[value] += count;
    }
    // Ordered pairs: the dot product is symmetric, so each unordered pair
    // counts twice.
    for (auto& [value, count] : merged) count *= 2;
    return merged;
}

long long pair_count_with_dot(const PointSet& e, const Scalar& alpha) {
    const int n = e.size();
    long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (dot(e.points[static_cast<std::size_t>(i)],
                    e.points[static_cast<std::size_t>(j)]) == alpha) {
                ++total;
            }
        }
    }
    return total;
}

std::vector<BigInt> dp_step(const std::vector<std::vector<int>>& adjacency,
                            const std::vector<BigInt>& in) {
    const int n = static_cast<int>(adjacency.size());
    std::vector<BigInt> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (int q = 0; q < n; ++q) {
        BigInt acc(0);
        for (int p : adjacency[static_cast<std::size_t>(q)]) {
            acc += in[static_cast<std::size_t>(p)];
        }
        out[static_cast<std::size_t>(q)] = std::move(acc);
    }
    return out;
}

Scalar min_squared_separation(const PointSet& e) {
    const int n = e.size();
    if (n < 2) throw ValidationError("separation needs at least two points");

    const auto coords = to_double_coords(e);
    const int d = e.dim;

    double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (int c = 0; c < d; ++c) {
                const double diff = coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                                    coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                acc += diff * diff;
            }
            best = std::min(best, acc);
        }
    }

    // The double pass only prescreens; candidates within a generous margin of
    // the double minimum are re-compared exactly. Non-finite doubles (values
    // outside double range) disable the prescreen for the affected pairs.
    const bool screen_ok = std::isfinite(best);
    const double threshold = screen_ok
                                 ? best * (1.0 + 1e-6) + std::numeric_limits<double>::min()
                                 : std::numeric_limits<double>::infinity();

    const int threads = omp_get_max_threads();
    std::vector<std::vector<std::pair<int, int>>> candidate_lists(
        static_cast<std::size_t>(threads));
#pragma omp parallel
    {
        auto& local = candidate_lists[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double acc = 0.0;
                for (int c = 0; c < d; ++c) {
                    const double diff =
                        coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                        coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                    acc += diff * diff;
                }
                if (!(acc > threshold)) local.emplace_back(i, j);
            }
        }
    }

    Scalar minimum;
    bool have = false;
    for (const auto& list : candidate_lists) {
        for (const auto& [i, j] : list) {
            Scalar sq = squared_distance(e.points[static_cast<std::size_t>(i)],
                                         e.points[static_cast<std::size_t>(j)]);
            if (!have || sq < minimum) {
                minimum = std::move(sq);
                have = true;
            }
        }
    }
    return minimum;
}

double energy_sum(const PointSet& e, double s) {
    const int n = e.size();
    const int threads = omp_get_max_threads();
    std::vector<double> partial(static_cast<std::size_t>(threads), 0.0);
#pragma omp parallel
    {
        double local = 0.0;
#pragma omp for schedule(dynamic, 16)
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double sq = to_double(squared_distance(
                    e.points[static_cast<std::size_t>(i)], e.points[static_cast<std::size_t>(j)]));
                local += std::pow(sq, -s / 2.0);
            }
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
    }
    double total = 0.0;
    for (double part : partial) total += part;
    return total;
}

long long incidence_count(const PointSet& e, const std::vector<LineKey>& lines) {
    const int n = e.size();
    const int m = static_cast<int>(lines.size());
    long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (int i = 0; i < n; ++i) {
        const Point& p = e.points[static_cast<std::size_t>(i)];
        for (int l = 0; l < m; ++l) {
            if (lines[static_cast<std::size_t>(l)].contains(p)) ++total;
        }
    }
    return total;
}

std::vector<int> richest_line_members(const PointSet& e) {
    const int n = e.size();
    if (n < 2) throw ValidationError("line richness needs at least two points");

    std::vector<AnchorBest> per_anchor(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
        per_anchor[static_cast<std::size_t>(i)] = best_direction_at(e, i);
    }

    int best_anchor = 0;
    for (int i = 1; i < n; ++i) {
        if (per_anchor[static_cast<std::size_t>(i)].count >
            per_anchor[static_cast<std::size_t>(best_anchor)].count) {
            best_anchor = i;
        }
    }

    const AnchorBest& best = per_anchor[static_cast<std::size_t>(best_anchor)];
    const Point key = direction_key(e.points[static_cast<std::size_t>(best_anchor)],
                                    e.points[static_cast<std::size_t>(best.first_j)]);
    std::vector<int> members{best_anchor};
    for (int j = 0; j < n; ++j) {
        if (j == best_anchor) continue;
        if (direction_key(e.points[static_cast<std::size_t>(best_anchor)],
                          e.points[static_cast<std::size_t>(j)]) == key) {
            members.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

namespace serial {

std::vector<std::vector<int>> dot_adjacency(const PointSet& e, const Scalar& alpha) {
    const int n = e.size();
    std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (dot(e.points[static_cast<std::size_t>(i)],
                    e.points[static_cast<std::size_t>(j)]) == alpha) {
                neighbors[static_cast<std::size_t>(i)].push_back(j);
            }
        }
    }
    return neighbors;
}

std::unordered_map<Scalar, long long, ScalarHash> pair_dot_histogram(const PointSet& e) {
    std::unordered_map<Scalar, long long, ScalarHash> counts;
    const int n = e.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            counts[dot(e.points[static_cast<std::size_t>(i)],
                       e.points[static_cast<std::size_t>(j)])] += 1;
        }
    }
    for (auto& [value, count] : counts) count *= 2;
    return counts;
}

long long pair_count_with_dot(const PointSet& e, const Scalar& alpha) {
    const int n = e.size();
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j != i && dot(e.points[static_cast<std::size_t>(i)],
                              e.points[static_cast<std::size_t>(j)]) == alpha) {
                ++total;
            }
        }
    }
    return total;
}

std::vector<BigInt> dp_step(const std::vector<std::vector<int>>& adjacency,
                            const std::vector<BigInt>& in) {
    const std::size_t n = adjacency.size();
    std::vector<BigInt> out(n);
    for (std::size_t q = 0; q < n; ++q) {
        for (int p : adjacency[q]) out[q] += in[static_cast<std::size_t>(p)];
    }
    return out;
}

Scalar min_squared_separation(const PointSet& e) {
    const int n = e.size();
    if (n < 2) throw ValidationError("separation needs at least two points");
    Scalar minimum;
    bool have = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Scalar sq = squared_distance(e.points[static_cast<std::size_t>(i)],
                                         e.points[static_cast<std::size_t>(j)]);
            if (!have || sq < minimum) {
                minimum = std::move(sq);
                have = true;
            }
        }
    }
    return minimum;
}

double energy_sum(const PointSet& e, double s) {
    const int n = e.size();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double sq = to_double(squared_distance(
                e.points[static_cast<std::size_t>(i)], e.points[static_cast<std::size_t>(j)]));
            total += std::pow(sq, -s / 2.0);
        }
    }
    return total;
}

long long incidence_count(const PointSet& e, const std::vector<LineKey>& lines) {
    long long total = 0;
    for (const Point& p : e.points) {
        for (const LineKey& line : lines) {
            if (line.contains(p)) ++total;
        }
    }
    return total;
}

std::vector<int> richest_line_members(const PointSet& e) {
    const int n = e.size();
    if (n < 2) throw ValidationError("line richness needs at least two points");
    std::vector<AnchorBest> per_anchor(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        per_anchor[static_cast<std::size_t>(i)] = best_direction_at(e, i);
    }
    int best_anchor = 0;
    for (int i = 1; i < n; ++i) {
        if (per_anchor[static_cast<std::size_t>(i)].count >
            per_anchor[static_cast<std::size_t>(best_anchor)].count) {
            best_anchor = i;
        }
    }
    const AnchorBest& best = per_anchor[static_cast<std::size_t>(best_anchor)];
    const Point key = direction_key(e.points[static_cast<std::size_t>(best_anchor)],
                                    e.points[static_cast<std::size_t>(best.first_j)]);
    std::vector<int> members{best_anchor};
    for (int j = 0; j < n; ++j) {
        if (j == best_anchor) continue;
        if (direction_key(e.points[static_cast<std::size_t>(best_anchor)],
                          e.points[static_cast<std::size_t>(j)]) == key) {
            members.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace serial

}  // namespace dpchains::kernels
