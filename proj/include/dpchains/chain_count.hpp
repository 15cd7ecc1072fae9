#pragma once

#include <string_view>
#include <vector>

#include "dpchains/chain_type.hpp"
#include "dpchains/point_set.hpp"
#include "dpchains/scalar.hpp"

namespace dpchains {

// A k-chain of type (alpha_1..alpha_k) is a (k+1)-tuple of points whose
// consecutive dot products hit the targets. With-repeats counting follows the
// tuple definition literally; pairwise-distinct additionally requires all
// entries distinct.
enum class CountMode { WithRepeats, PairwiseDistinct };

std::string_view to_string(CountMode mode);

struct CountReport {
    BigInt count;
    CountMode mode = CountMode::WithRepeats;
    int n = 0;
    ChainType chain_type;
    double elapsed_ms = 0.0;
};

// Exact with-repeats count by layered path counting: v_0 = 1, then
// v_j(Q) = sum over dot(P, Q) = alpha_j of v_{j-1}(P), answer sum v_k.
CountReport count_chains_dp(const PointSet& e, const ChainType& t);

// Exact pairwise-distinct count (see detail::distinct_chain_count).
CountReport count_chains_distinct(const PointSet& e, const ChainType& t);

struct EnumerationResult {
    // Witness tuples as point indices into e, lexicographic. At most `limit`
    // are materialized; the report always carries the exact full count.
    std::vector<std::vector<int>> witnesses;
    CountReport report;
};

EnumerationResult enumerate_chains(const PointSet& e, const ChainType& t, bool distinct,
                                   long long limit);

// Ordered pairs (P, Q), P != Q, with dot(P, Q) = alpha.
BigInt count_pairs_with_dot(const PointSet& e, const Scalar& alpha,
                            bool allow_zero = false);

namespace detail {

// Per-type dot adjacency, one symmetric neighbor table per distinct target.
struct TypeAdjacency {
    std::vector<Scalar> unique_alphas;
    std::vector<int> constraint_alpha;  // k entries, index into unique_alphas
    std::vector<std::vector<std::vector<int>>> neighbors;
};

TypeAdjacency build_type_adjacency(const PointSet& e, const ChainType& t);

// Counts tuples with all k+1 entries pairwise distinct, without enumerating
// them: inclusion-exclusion over set partitions of the positions, where each
// partition's term is a homomorphism count of the quotient constraint graph,
// evaluated by sparse variable elimination.
BigInt distinct_chain_count(const PointSet& e, const ChainType& t);

}  // namespace detail

}  // namespace dpchains
