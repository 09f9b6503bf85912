#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "immanant/errors.hpp"

namespace immanant {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_decimal(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw ParseError("empty integer literal", 0);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        throw ParseError("sign without digits", 0);
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("non-digit in integer literal '" + s + "'", i);
    if (s[0] == '+')
        s.erase(0, 1);
    return BigInt(s, 10);
}

/// Bits of |v|; 0 for v = 0.
inline std::size_t bit_length(const BigInt& v) {
    if (v == 0)
        return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

/// Smallest r >= 0 with r*r >= v, for v >= 0.
inline BigInt ceil_sqrt(const BigInt& v) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r * r < v)
        ++r;
    return r;
}

}  // namespace immanant
