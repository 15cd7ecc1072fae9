#include <omp.h>

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dpchains/chain_count.hpp"
#include "dpchains/errors.hpp"

// Pairwise-distinct counting.
//
// Over the partition lattice of the k+1 tuple positions,
//
//   distinct = sum over partitions Q of mu(Q) * W(Q),
//   mu(Q)    = prod over blocks B of (-1)^(|B|-1) * (|B|-1)!,
//
// where W(Q) counts tuples constant on each block with the chain constraints
// applied (no inequality constraints). W(Q) is a homomorphism count of the
// quotient of the position path under Q, evaluated by variable elimination
// with sparse factors: each surviving dot constraint is a 0/1 matrix over
// point indices, consecutive positions collapsed into one block become a
// dot(P, P) = alpha indicator. Quotients of a path with at most 7 positions
// have treewidth <= 2, so elimination meets only unary/binary factors there;
// longer chains can need a ternary join, which falls back to backtracking.

namespace dpchains::detail {

namespace {

using Unary = std::unordered_map<int, BigInt>;

struct Binary {
    int u;  // first variable (smaller block id)
    int v;  // second variable
    // Ordered support pairs (pu, pv) with weights; starts as an adjacency
    // indicator, accumulates counts as variables are summed out.
    std::vector<std::pair<std::pair<int, int>, BigInt>> entries;
};

struct PairKeyHash {
    std::size_t operator()(const std::pair<int, int>& p) const {
        return std::hash<long long>()((static_cast<long long>(p.first) << 32) ^
                                      static_cast<unsigned>(p.second));
    }
};

// Per-partition requirements, one target per block pair / self block at most
// (two distinct targets on the same pair force an empty count).
struct QuotientConstraints {
    std::vector<int> self_alpha;                              // -1 = none
    std::vector<std::pair<std::pair<int, int>, int>> edges;   // ((u,v), alpha idx), u < v
    bool infeasible = false;
};

QuotientConstraints collapse_constraints(const std::vector<int>& block_of,
                                         int num_blocks, const TypeAdjacency& adj) {
    QuotientConstraints out;
    out.self_alpha.assign(static_cast<std::size_t>(num_blocks), -1);
    std::unordered_map<std::pair<int, int>, int, PairKeyHash> edge_alpha;
    const int k = static_cast<int>(adj.constraint_alpha.size());
    for (int j = 0; j < k; ++j) {
        const int ai = adj.constraint_alpha[static_cast<std::size_t>(j)];
        int u = block_of[static_cast<std::size_t>(j)];
        int v = block_of[static_cast<std::size_t>(j + 1)];
        if (u == v) {
            int& slot = out.self_alpha[static_cast<std::size_t>(u)];
            if (slot >= 0 && slot != ai) {
                out.infeasible = true;
                return out;
            }
            slot = ai;
        } else {
            if (u > v) std::swap(u, v);
            auto [it, inserted] = edge_alpha.emplace(std::make_pair(u, v), ai);
            if (!inserted && it->second != ai) {
                out.infeasible = true;
                return out;
            }
        }
    }
    out.edges.assign(edge_alpha.begin(), edge_alpha.end());
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// Walk-count fallback for quotients whose elimination would need a factor of
// arity three (possible once k >= 7). Backtracks over positions; branching
// happens only at a block's first position.
BigInt hom_count_backtrack(const std::vector<int>& block_of, int num_blocks,
                           const TypeAdjacency& adj, int n) {
    const int m = static_cast<int>(block_of.size());
    std::vector<int> assign(static_cast<std::size_t>(num_blocks), -1);

    auto self_ok = [&](int block, int point) {
        // Self constraints are checked when the block gets its point.
        for (std::size_t j = 0; j + 1 < block_of.size(); ++j) {
            if (block_of[j] == block && block_of[j + 1] == block) {
                const int ai = adj.constraint_alpha[j];
                const auto& nb = adj.neighbors[static_cast<std::size_t>(ai)]
                                              [static_cast<std::size_t>(point)];
                if (!std::binary_search(nb.begin(), nb.end(), point)) return false;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, int pos) -> BigInt {
        if (pos == m) return BigInt(1);
        const int b = block_of[static_cast<std::size_t>(pos)];
        if (pos == 0) {
            BigInt acc(0);
            for (int p = 0; p < n; ++p) {
                if (!self_ok(b, p)) continue;
                assign[static_cast<std::size_t>(b)] = p;
                acc += self(self, 1);
                assign[static_cast<std::size_t>(b)] = -1;
            }
            return acc;
        }
        const int prev_b = block_of[static_cast<std::size_t>(pos - 1)];
        const int prev_p = assign[static_cast<std::size_t>(prev_b)];
        const int ai = adj.constraint_alpha[static_cast<std::size_t>(pos - 1)];
        const auto& nb =
            adj.neighbors[static_cast<std::size_t>(ai)][static_cast<std::size_t>(prev_p)];
        const int cur = assign[static_cast<std::size_t>(b)];
        if (cur >= 0) {
            if (prev_b == b) return self(self, pos + 1);  // self edge already vetted
            if (!std::binary_search(nb.begin(), nb.end(), cur)) return BigInt(0);
            return self(self, pos + 1);
        }
        BigInt acc(0);
        for (int q : nb) {
            if (!self_ok(b, q)) continue;
            assign[static_cast<std::size_t>(b)] = q;
            acc += self(self, pos + 1);
            assign[static_cast<std::size_t>(b)] = -1;
        }
        return acc;
    };
    return rec(rec, 0);
}

class Eliminator {
public:
    Eliminator(const QuotientConstraints& q, const TypeAdjacency& adj, int n,
               int num_blocks)
        : n_(n), num_vars_(num_blocks), alive_(static_cast<std::size_t>(num_blocks), true),
          unary_(static_cast<std::size_t>(num_blocks)) {
        for (int b = 0; b < num_blocks; ++b) {
            const int ai = q.self_alpha[static_cast<std::size_t>(b)];
            if (ai < 0) continue;
            Unary ind;
            const auto& nb = adj.neighbors[static_cast<std::size_t>(ai)];
            for (int p = 0; p < n; ++p) {
                if (std::binary_search(nb[static_cast<std::size_t>(p)].begin(),
                                       nb[static_cast<std::size_t>(p)].end(), p)) {
                    ind.emplace(p, 1);
                }
            }
            multiply_unary(b, std::move(ind));
        }
        for (const auto& [pair, ai] : q.edges) {
            Binary factor;
            factor.u = pair.first;
            factor.v = pair.second;
            const auto& nb = adj.neighbors[static_cast<std::size_t>(ai)];
            for (int p = 0; p < n; ++p) {
                for (int qn : nb[static_cast<std::size_t>(p)]) {
                    factor.entries.push_back({{p, qn}, BigInt(1)});
                }
            }
            insert_binary(std::move(factor));
        }
    }

    // Sums out all variables; empty optional means a ternary join was needed.
    std::optional<BigInt> run() {
        BigInt scalar(1);
        for (int remaining = num_vars_; remaining > 0; --remaining) {
            const int v = pick_min_degree();
            const auto nbs = neighbor_vars(v);
            if (nbs.size() > 2) return std::nullopt;
            if (nbs.empty()) {
                scalar *= sum_out_isolated(v);
            } else if (nbs.size() == 1) {
                eliminate_degree_one(v, nbs[0]);
            } else {
                eliminate_degree_two(v, nbs[0], nbs[1]);
            }
            alive_[static_cast<std::size_t>(v)] = false;
            if (scalar == 0) return BigInt(0);
        }
        return scalar;
    }

private:
    void multiply_unary(int var, Unary factor) {
        auto& slot = unary_[static_cast<std::size_t>(var)];
        if (!slot) {
            slot = std::move(factor);
            return;
        }
        Unary merged;
        for (const auto& [p, w] : *slot) {
            auto it = factor.find(p);
            if (it != factor.end()) {
                BigInt prod = w * it->second;
                if (prod != 0) merged.emplace(p, std::move(prod));
            }
        }
        slot = std::move(merged);
    }

    void insert_binary(Binary factor) {
        for (auto& existing : binaries_) {
            if (existing.u == factor.u && existing.v == factor.v) {
                existing = hadamard(existing, factor);
                return;
            }
        }
        binaries_.push_back(std::move(factor));
    }

    static Binary hadamard(const Binary& a, const Binary& b) {
        std::unordered_map<std::pair<int, int>, BigInt, PairKeyHash> lookup;
        lookup.reserve(b.entries.size());
        for (const auto& [key, w] : b.entries) lookup.emplace(key, w);
        Binary out;
        out.u = a.u;
        out.v = a.v;
        for (const auto& [key, w] : a.entries) {
            auto it = lookup.find(key);
            if (it != lookup.end()) {
                BigInt prod = w * it->second;
                if (prod != 0) out.entries.push_back({key, std::move(prod)});
            }
        }
        return out;
    }

    std::vector<int> neighbor_vars(int v) const {
        std::vector<int> nbs;
        for (const auto& b : binaries_) {
            if (b.u == v && std::find(nbs.begin(), nbs.end(), b.v) == nbs.end()) {
                nbs.push_back(b.v);
            } else if (b.v == v && std::find(nbs.begin(), nbs.end(), b.u) == nbs.end()) {
                nbs.push_back(b.u);
            }
        }
        return nbs;
    }

    int pick_min_degree() const {
        int best = -1;
        std::size_t best_deg = 0;
        for (int v = 0; v < num_vars_; ++v) {
            if (!alive_[static_cast<std::size_t>(v)]) continue;
            const std::size_t deg = neighbor_vars(v).size();
            if (best < 0 || deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        return best;
    }

    BigInt sum_out_isolated(int v) {
        const auto& slot = unary_[static_cast<std::size_t>(v)];
        if (!slot) return BigInt(n_);  // unconstrained variable
        BigInt acc(0);
        for (const auto& [p, w] : *slot) acc += w;
        return acc;
    }

    // Weight of point p under var's unary factor (1 when no factor).
    static const BigInt* unary_weight(const std::optional<Unary>& u, int p,
                                      const BigInt& one) {
        if (!u) return &one;
        auto it = u->find(p);
        return it == u->end() ? nullptr : &it->second;
    }

    Binary take_binary(int a, int b) {
        for (std::size_t i = 0; i < binaries_.size(); ++i) {
            if ((binaries_[i].u == a && binaries_[i].v == b) ||
                (binaries_[i].u == b && binaries_[i].v == a)) {
                Binary out = std::move(binaries_[i]);
                binaries_.erase(binaries_.begin() + static_cast<std::ptrdiff_t>(i));
                return out;
            }
        }
        return Binary{a, b, {}};
    }

    void eliminate_degree_one(int v, int u) {
        const Binary factor = take_binary(v, u);
        const BigInt one(1);
        const auto& uv = unary_[static_cast<std::size_t>(v)];
        Unary message;
        for (const auto& [key, w] : factor.entries) {
            const int pv = factor.u == v ? key.first : key.second;
            const int pu = factor.u == v ? key.second : key.first;
            const BigInt* vw = unary_weight(uv, pv, one);
            if (!vw) continue;
            message[pu] += w * (*vw);
        }
        multiply_unary(u, std::move(message));
    }

    void eliminate_degree_two(int v, int u, int w) {
        const Binary f1 = take_binary(v, u);
        const Binary f2 = take_binary(v, w);
        const BigInt one(1);
        const auto& uv = unary_[static_cast<std::size_t>(v)];

        // Index both factors by the shared variable's point.
        std::unordered_map<int, std::vector<std::pair<int, const BigInt*>>> by_pv_1;
        for (const auto& [key, weight] : f1.entries) {
            const int pv = f1.u == v ? key.first : key.second;
            const int pu = f1.u == v ? key.second : key.first;
            by_pv_1[pv].push_back({pu, &weight});
        }
        std::unordered_map<int, std::vector<std::pair<int, const BigInt*>>> by_pv_2;
        for (const auto& [key, weight] : f2.entries) {
            const int pv = f2.u == v ? key.first : key.second;
            const int pw = f2.u == v ? key.second : key.first;
            by_pv_2[pv].push_back({pw, &weight});
        }

        std::unordered_map<std::pair<int, int>, BigInt, PairKeyHash> product;
        for (const auto& [pv, list1] : by_pv_1) {
            auto it2 = by_pv_2.find(pv);
            if (it2 == by_pv_2.end()) continue;
            const BigInt* vw = unary_weight(uv, pv, one);
            if (!vw) continue;
            for (const auto& [pu, w1] : list1) {
                BigInt left = (*w1) * (*vw);
                for (const auto& [pw, w2] : it2->second) {
                    product[{pu, pw}] += left * (*w2);
                }
            }
        }

        Binary out;
        out.u = std::min(u, w);
        out.v = std::max(u, w);
        out.entries.reserve(product.size());
        for (auto& [key, weight] : product) {
            const auto oriented = (u <= w) ? key : std::make_pair(key.second, key.first);
            out.entries.push_back({oriented, std::move(weight)});
        }
        insert_binary(std::move(out));
    }

    int n_;
    int num_vars_;
    std::vector<bool> alive_;
    std::vector<std::optional<Unary>> unary_;
    std::vector<Binary> binaries_;
};

BigInt hom_count(const std::vector<int>& block_of, int num_blocks,
                 const TypeAdjacency& adj, int n) {
    const QuotientConstraints q = collapse_constraints(block_of, num_blocks, adj);
    if (q.infeasible) return BigInt(0);
    Eliminator elim(q, adj, n, num_blocks);
    if (auto result = elim.run()) return *result;
    return hom_count_backtrack(block_of, num_blocks, adj, n);
}

BigInt mobius_weight(const std::vector<int>& block_of, int num_blocks) {
    std::vector<int> sizes(static_cast<std::size_t>(num_blocks), 0);
    for (int b : block_of) sizes[static_cast<std::size_t>(b)] += 1;
    BigInt weight(1);
    for (int size : sizes) {
        BigInt factorial(1);
        for (int i = 2; i < size; ++i) factorial *= i;
        if ((size - 1) % 2 == 1) factorial = -factorial;
        weight *= factorial;
    }
    return weight;
}

// All set partitions of {0..m-1} as restricted growth strings.
std::vector<std::vector<int>> all_partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == m) {
            out.push_back(rgs);
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            rgs[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, std::max(max_used, b));
        }
    };
    rec(rec, 1, 0);  // position 0 is always block 0
    return out;
}

}  // namespace

BigInt distinct_chain_count(const PointSet& e, const ChainType& t) {
    const int m = t.k() + 1;
    if (m > 12) {
        throw ValidationError("pairwise-distinct counting supports k <= 11");
    }
    const TypeAdjacency adj = build_type_adjacency(e, t);
    const int n = e.size();

    const auto partitions = all_partitions(m);
    const int threads = omp_get_max_threads();
    std::vector<BigInt> partial(static_cast<std::size_t>(threads), BigInt(0));
#pragma omp parallel
    {
        BigInt local(0);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(partitions.size());
             ++idx) {
            const auto& block_of = partitions[static_cast<std::size_t>(idx)];
            const int num_blocks = *std::max_element(block_of.begin(), block_of.end()) + 1;
            local += mobius_weight(block_of, num_blocks) *
                     hom_count(block_of, num_blocks, adj, n);
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
    }
    BigInt total(0);
    for (BigInt& part : partial) total += part;
    return total;
}

}  // namespace dpchains::detail
