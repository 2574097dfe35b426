#pragma once

#include <cstdint>
#include <string>

#include "supersat/errors.hpp"

namespace supersat {

// Counting accumulator.  Bowtie counts clear 2^63 well below n = 10^4,
// so all totals are carried in 128 bits and overflow is an error.
using u128 = unsigned __int128;

inline u128 add_checked(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("128-bit addition overflow");
    return r;
}

inline u128 mul_checked(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("128-bit multiplication overflow");
    return r;
}

inline u128 sub_checked(u128 a, u128 b) {
    if (b > a) throw Overflow("128-bit subtraction underflow");
    return a - b;
}

// x choose 2
inline u128 binom2(u128 x) {
    if (x < 2) return 0;
    return mul_checked(x, x - 1) / 2;
}

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back((char)('0' + (int)(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

inline u128 u128_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad digit in integer: " + s);
        v = add_checked(mul_checked(v, 10), (u128)(c - '0'));
    }
    return v;
}

inline bool fits_u64(u128 v) { return v <= (u128)UINT64_MAX; }

}  // namespace supersat
