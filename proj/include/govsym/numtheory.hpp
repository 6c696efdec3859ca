#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "govsym/common.hpp"

namespace govsym {

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 x = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    if (x > 0xFFFFFFFFull) x = 0xFFFFFFFFull;  // keep x*x inside u64
    while (x > 0 && x * x > n) --x;
    while (x < 0xFFFFFFFFull && (x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline u64 isqrt_u128(u128 n) {
    if (n <= std::numeric_limits<u64>::max()) return isqrt_u64(static_cast<u64>(n));
    u128 g = static_cast<u128>(isqrt_u64(static_cast<u64>(n >> 64)) + 1) << 32;
    for (;;) {
        u128 next = (g + n / g) >> 1;
        if (next >= g) break;
        g = next;
    }
    while (g * g > n) --g;
    while ((g + 1) * (g + 1) <= n) ++g;
    return static_cast<u64>(g);
}

/// Jacobi symbol (m/n) for odd n > 0 and any integer m; 0 when gcd(m,n) > 1.
/// Binary algorithm, O(log^2).
inline int jacobi_int(i64 m, i64 n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: denominator must be odd and positive");
    m %= n;
    if (m < 0) m += n;
    int t = 1;
    u64 a = static_cast<u64>(m), b = static_cast<u64>(n);
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 r = b & 7;
            if (r == 3 || r == 5) t = -t;
        }
        u64 tmp = a;
        a = b;
        b = tmp;
        if ((a & 3) == 3 && (b & 3) == 3) t = -t;
        a %= b;
    }
    return b == 1 ? t : 0;
}

inline int jacobi_int(i128 m, i64 n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: denominator must be odd and positive");
    i128 r = m % n;
    if (r < 0) r += n;
    return jacobi_int(static_cast<i64>(r), n);
}

/// Square root of a mod odd prime p (Tonelli-Shanks); requires (a/p) = 1.
inline u64 sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (jacobi_int(static_cast<i64>(a), static_cast<i64>(p)) != 1)
        throw std::invalid_argument("sqrt_mod: not a quadratic residue");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    u64 s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (jacobi_int(static_cast<i64>(z), static_cast<i64>(p)) != -1) ++z;
    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

inline u64 euler_phi(u64 n) {
    u64 result = n;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            result -= result / q;
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline int valuation2(u64 n) {
    int k = 0;
    while (n != 0 && (n & 1) == 0) {
        n >>= 1;
        ++k;
    }
    return k;
}

inline bool is_square_u64(u64 n) {
    u64 r = isqrt_u64(n);
    return r * r == n;
}

}  // namespace govsym
