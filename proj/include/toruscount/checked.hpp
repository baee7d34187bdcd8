#pragma once

#include <cstdint>
#include <stdexcept>

namespace toruscount {

using i64 = std::int64_t;

// Counting results are exact 64-bit integers; arithmetic that could wrap
// must fail loudly instead.
inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in counting arithmetic");
    return r;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in counting arithmetic");
    return r;
}

// a^e with overflow detection; e >= 0.
inline i64 checked_pow(i64 a, i64 e) {
    i64 r = 1;
    while (e-- > 0) r = checked_mul(r, a);
    return r;
}

}  // namespace toruscount
