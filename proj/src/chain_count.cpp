#include "dpchains/chain_count.hpp"

#include <algorithm>
#include <chrono>

#include "dpchains/errors.hpp"
#include "dpchains/kernels.hpp"

namespace dpchains {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void validate_inputs(const PointSet& e, const ChainType& t) {
    if (e.points.empty()) throw ValidationError("empty point set");
    t.validate();
}

}  // namespace

std::string_view to_string(CountMode mode) {
    return mode == CountMode::WithRepeats ? "with-repeats" : "pairwise-distinct";
}

namespace detail {

TypeAdjacency build_type_adjacency(const PointSet& e, const ChainType& t) {
    TypeAdjacency adj;
    adj.constraint_alpha.reserve(t.alphas.size());
    for (const Scalar& alpha : t.alphas) {
        auto it = std::find(adj.unique_alphas.begin(), adj.unique_alphas.end(), alpha);
        if (it == adj.unique_alphas.end()) {
            adj.unique_alphas.push_back(alpha);
            it = std::prev(adj.unique_alphas.end());
        }
        adj.constraint_alpha.push_back(
            static_cast<int>(std::distance(adj.unique_alphas.begin(), it)));
    }
    adj.neighbors.reserve(adj.unique_alphas.size());
    for (const Scalar& alpha : adj.unique_alphas) {
        adj.neighbors.push_back(kernels::dot_adjacency(e, alpha));
    }
    return adj;
}

}  // namespace detail

CountReport count_chains_dp(const PointSet& e, const ChainType& t) {
    const auto start = Clock::now();
    validate_inputs(e, t);

    const auto adj = detail::build_type_adjacency(e, t);
    std::vector<BigInt> layer(static_cast<std::size_t>(e.size()), BigInt(1));
    for (int ai : adj.constraint_alpha) {
        layer = kernels::dp_step(adj.neighbors[static_cast<std::size_t>(ai)], layer);
    }
    BigInt total(0);
    for (const BigInt& v : layer) total += v;

    return CountReport{std::move(total), CountMode::WithRepeats, e.size(), t,
                       ms_since(start)};
}

CountReport count_chains_distinct(const PointSet& e, const ChainType& t) {
    const auto start = Clock::now();
    validate_inputs(e, t);
    BigInt total = detail::distinct_chain_count(e, t);
    return CountReport{std::move(total), CountMode::PairwiseDistinct, e.size(), t,
                       ms_since(start)};
}

EnumerationResult enumerate_chains(const PointSet& e, const ChainType& t, bool distinct,
                                   long long limit) {
    const auto start = Clock::now();
    validate_inputs(e, t);
    if (limit < 0) throw ValidationError("limit must be >= 0");

    EnumerationResult result;
    result.report = distinct ? count_chains_distinct(e, t) : count_chains_dp(e, t);

    if (limit > 0) {
        // Witnesses come from a separate backtracking pass in index order, so
        // the emitted prefix is deterministic regardless of how the full
        // count was obtained.
        const auto adj = detail::build_type_adjacency(e, t);
        const int k = t.k();
        const int n = e.size();
        std::vector<int> tuple(static_cast<std::size_t>(k) + 1, -1);
        std::vector<char> used(static_cast<std::size_t>(n), 0);

        auto dfs = [&](auto&& self, int pos) -> bool {
            if (pos == k + 1) {
                result.witnesses.push_back(tuple);
                return static_cast<long long>(result.witnesses.size()) >= limit;
            }
            if (pos == 0) {
                for (int i = 0; i < n; ++i) {
                    tuple[0] = i;
                    if (distinct) used[static_cast<std::size_t>(i)] = 1;
                    if (self(self, 1)) return true;
                    if (distinct) used[static_cast<std::size_t>(i)] = 0;
                }
                return false;
            }
            const auto& nb =
                adj.neighbors[static_cast<std::size_t>(
                    adj.constraint_alpha[static_cast<std::size_t>(pos - 1)])]
                             [static_cast<std::size_t>(tuple[static_cast<std::size_t>(pos - 1)])];
            for (int j : nb) {
                if (distinct && used[static_cast<std::size_t>(j)]) continue;
                tuple[static_cast<std::size_t>(pos)] = j;
                if (distinct) used[static_cast<std::size_t>(j)] = 1;
                if (self(self, pos + 1)) return true;
                if (distinct) used[static_cast<std::size_t>(j)] = 0;
            }
            return false;
        };
        dfs(dfs, 0);
    }

    result.report.elapsed_ms = ms_since(start);
    return result;
}

BigInt count_pairs_with_dot(const PointSet& e, const Scalar& alpha, bool allow_zero) {
    if (e.points.empty()) throw ValidationError("empty point set");
    if (alpha == 0 && !allow_zero) {
        throw ValidationError("zero dot target requires allow-zero");
    }
    return BigInt(kernels::pair_count_with_dot(e, alpha));
}

}  // namespace dpchains
