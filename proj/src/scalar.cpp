#include "dpchains/scalar.hpp"

#include <cctype>
#include <cmath>

#include "dpchains/errors.hpp"

namespace dpchains {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer_token(num, true)) {
        throw ParseError("invalid rational '" + std::string(text) +
                         "': expected \"p\" or \"p/q\"");
    }
    mpz_class numerator(std::string(num), 10);
    mpz_class denominator(1);
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!valid_integer_token(den, false)) {
            throw ParseError("invalid rational '" + std::string(text) +
                             "': denominator must be a positive integer");
        }
        denominator = mpz_class(std::string(den), 10);
        if (denominator == 0) {
            throw ParseError("invalid rational '" + std::string(text) +
                             "': zero denominator");
        }
    }
    Scalar result(numerator, denominator);
    result.canonicalize();
    return result;
}

std::string scalar_to_string(const Scalar& s) {
    if (s.get_den() == 1) return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

std::string bigint_to_string(const BigInt& n) { return n.get_str(); }

double to_double(const Scalar& s) { return s.get_d(); }

double to_double(const BigInt& n) { return n.get_d(); }

double log_bigint(const BigInt& n) {
    signed long exp = 0;
    const double mantissa = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp) * std::log(2.0);
}

std::size_t hash_value(const BigInt& n) {
    const auto* z = n.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
    const mp_limb_t* limbs = mpz_limbs_read(z);
    const std::size_t limb_count = mpz_size(z);
    for (std::size_t i = 0; i < limb_count; ++i) {
        h ^= static_cast<std::size_t>(limbs[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) +
             (h >> 2);
    }
    return h;
}

std::size_t hash_value(const Scalar& s) {
    std::size_t h = hash_value(BigInt(s.get_num()));
    h ^= hash_value(BigInt(s.get_den())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace dpchains
