#pragma once

#include <string_view>
#include <vector>

#include "dpchains/scalar.hpp"

namespace dpchains {

// The type of a k-chain: the ordered targets (alpha_1, ..., alpha_k) that
// consecutive tuple entries must realize as dot products. Zero targets are
// rejected unless allow_zero is set.
struct ChainType {
    std::vector<Scalar> alphas;
    bool allow_zero = false;

    int k() const { return static_cast<int>(alphas.size()); }

    // k >= 1 and, without allow_zero, every target nonzero.
    void validate() const;

    // Parses a comma-separated list of rational strings, e.g. "1,1/2,2".
    static ChainType parse(std::string_view comma_list, bool allow_zero = false);
};

std::string chain_type_to_string(const ChainType& t);

}  // namespace dpchains
