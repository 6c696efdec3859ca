#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace govsym {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Thrown when an operation is asked to exceed its supported scale
/// (e.g. brute-force residue sums past the documented limit).
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

inline i64 narrow_checked(i128 v) {
    if (v < std::numeric_limits<i64>::min() || v > std::numeric_limits<i64>::max())
        throw std::overflow_error("Z[sqrt(2)] arithmetic overflow: result exceeds 64-bit range");
    return static_cast<i64>(v);
}

inline i128 add_checked(i128 x, i128 y) {
    i128 r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("Z[sqrt(2)] arithmetic overflow in 128-bit intermediate");
    return r;
}

inline i64 neg_checked(i64 x) {
    if (x == std::numeric_limits<i64>::min())
        throw std::overflow_error("negation overflow");
    return -x;
}

inline u64 abs_u64(i64 x) {
    return x < 0 ? ~static_cast<u64>(x) + 1 : static_cast<u64>(x);
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i128 sq_i128(i64 x) { return static_cast<i128>(x) * x; }

}  // namespace govsym
