#pragma once

#include <stdexcept>
#include <vector>

#include "govsym/common.hpp"
#include "govsym/numtheory.hpp"

namespace govsym {

/// Plain sieve of Eratosthenes; returns all primes <= X. Used as the
/// independent cross-check for the segmented sieve and for small ranges.
inline std::vector<i64> primes_up_to(i64 X) {
    if (X < 2) return {};
    std::vector<bool> composite(static_cast<std::size_t>(X) + 1, false);
    std::vector<i64> out;
    for (i64 i = 2; i <= X; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (i64 j = i * i; j <= X; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

/// Segmented sieve over [lo, hi]; memory O(sqrt(hi) + segment).
template <class F>
inline void for_each_prime_in(i64 lo, i64 hi, F&& fn) {
    if (hi < 2 || hi < lo) return;
    lo = std::max<i64>(lo, 2);
    const i64 seg_size = 1 << 20;
    std::vector<i64> base = primes_up_to(static_cast<i64>(isqrt_u64(static_cast<u64>(hi))));
    std::vector<bool> seg;
    for (i64 start = lo; start <= hi; start += seg_size) {
        i64 end = std::min<i64>(start + seg_size - 1, hi);
        seg.assign(static_cast<std::size_t>(end - start + 1), false);
        for (i64 p : base) {
            if (p * p > end) break;
            i64 first = std::max(p * p, ((start + p - 1) / p) * p);
            for (i64 j = first; j <= end; j += p) seg[static_cast<std::size_t>(j - start)] = true;
        }
        for (i64 v = start; v <= end; ++v)
            if (!seg[static_cast<std::size_t>(v - start)]) fn(v);
    }
}

template <class F>
inline void for_each_prime(i64 X, F&& fn) {
    if (X < 2) throw std::invalid_argument("sieve: X must be >= 2");
    for_each_prime_in(2, X, std::forward<F>(fn));
}

inline i64 prime_count(i64 X) {
    i64 n = 0;
    for_each_prime(X, [&](i64) { ++n; });
    return n;
}

}  // namespace govsym
