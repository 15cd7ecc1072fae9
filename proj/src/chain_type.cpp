#include "dpchains/chain_type.hpp"

#include <string>

#include "dpchains/errors.hpp"

namespace dpchains {

void ChainType::validate() const {
    if (alphas.empty()) {
        throw ValidationError("chain type needs at least one target");
    }
    if (!allow_zero) {
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            if (alphas[i] == 0) {
                throw ValidationError("zero target alpha_" + std::to_string(i + 1) +
                                      " requires allow-zero");
            }
        }
    }
}

ChainType ChainType::parse(std::string_view comma_list, bool allow_zero) {
    ChainType t;
    t.allow_zero = allow_zero;
    std::size_t start = 0;
    while (start <= comma_list.size()) {
        std::size_t end = comma_list.find(',', start);
        if (end == std::string_view::npos) end = comma_list.size();
        t.alphas.push_back(parse_scalar(comma_list.substr(start, end - start)));
        start = end + 1;
    }
    t.validate();
    return t;
}

std::string chain_type_to_string(const ChainType& t) {
    std::string out;
    for (std::size_t i = 0; i < t.alphas.size(); ++i) {
        if (i > 0) out += ",";
        out += scalar_to_string(t.alphas[i]);
    }
    return out;
}

}  // namespace dpchains
