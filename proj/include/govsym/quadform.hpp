#pragma once

#include <numeric>
#include <ostream>
#include <stdexcept>

#include "govsym/common.hpp"
#include "govsym/numtheory.hpp"

namespace govsym {

/// Binary quadratic form a*x^2 + b*x*y + c*y^2. The class-group oracle works
/// with positive definite forms (a > 0, discriminant < 0).
struct QuadForm {
    i64 a{0};
    i64 b{0};
    i64 c{0};

    friend constexpr bool operator==(QuadForm, QuadForm) = default;

    friend std::ostream& operator<<(std::ostream& os, QuadForm f) {
        return os << "[" << f.a << "," << f.b << "," << f.c << "]";
    }
};

inline i128 discriminant_wide(QuadForm f) noexcept {
    return sq_i128(f.b) - 4 * static_cast<i128>(f.a) * f.c;
}

inline i64 discriminant(QuadForm f) { return narrow_checked(discriminant_wide(f)); }

inline bool is_primitive(QuadForm f) noexcept {
    return gcd_u64(gcd_u64(abs_u64(f.a), abs_u64(f.b)), abs_u64(f.c)) == 1;
}

inline bool is_reduced(QuadForm f) noexcept {
    i64 ab = f.b < 0 ? -f.b : f.b;
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if (f.b < 0 && (ab == f.a || f.a == f.c)) return false;
    return true;
}

/// Gauss reduction to the unique reduced representative of the class.
inline QuadForm reduce_form(QuadForm f) {
    i128 D = discriminant_wide(f);
    if (D >= 0 || f.a <= 0)
        throw std::invalid_argument("reduce_form: need a positive definite form");
    i64 a = f.a, b = f.b, c = f.c;
    for (;;) {
        if (!(-a < b && b <= a)) {
            // translate b into (-a, a], keep the discriminant fixed
            i128 q = (static_cast<i128>(b) + a) % (2 * static_cast<i128>(a));
            if (q <= 0) q += 2 * static_cast<i128>(a);
            i128 nb = q - a;  // in (-a, a]
            b = narrow_checked(nb);
            c = narrow_checked((sq_i128(b) - D) / (4 * static_cast<i128>(a)));
        }
        if (a > c) {
            i64 t = a;
            a = c;
            b = -b;
            c = t;
            continue;
        }
        break;
    }
    if (b < 0 && (-b == a || a == c)) b = -b;
    return {a, b, c};
}

inline QuadForm principal_form(i64 D) {
    if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
        throw std::invalid_argument("principal_form: D must be negative, 0 or 1 mod 4");
    if (((D % 4) + 4) % 4 == 0) return {1, 0, narrow_checked(-static_cast<i128>(D) / 4)};
    return {1, 1, narrow_checked((1 - static_cast<i128>(D)) / 4)};
}

inline QuadForm inverse(QuadForm f) { return reduce_form({f.a, -f.b, f.c}); }

namespace detail {

inline i64 inv_mod(i64 a, i64 m) {
    i64 r0 = m, r1 = ((a % m) + m) % m;
    i64 s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("inv_mod: not invertible");
    return ((s0 % m) + m) % m;
}

inline i64 eval_form(QuadForm f, i64 x, i64 y) {
    return narrow_checked(static_cast<i128>(f.a) * x * x + static_cast<i128>(f.b) * x * y +
                          static_cast<i128>(f.c) * y * y);
}

// Apply the SL2 substitution (X, Y) -> (x X + z Y, y X + w Y) where (z, w)
// extends the primitive column (x, y) to determinant 1.
inline QuadForm apply_primitive_column(QuadForm f, i64 x, i64 y) {
    i64 r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    i64 u = s0 * r0, v = t0 * r0;  // u*x + v*y = 1 (r0 = +-1 for primitive columns)
    i64 z = -v, w = u;             // x*w - y*z = 1
    i64 a2 = eval_form(f, x, y);
    i64 b2 = narrow_checked(
        2 * static_cast<i128>(f.a) * x * z +
        static_cast<i128>(f.b) * (static_cast<i128>(x) * w + static_cast<i128>(y) * z) +
        2 * static_cast<i128>(f.c) * y * w);
    i64 c2 = eval_form(f, z, w);
    return {a2, b2, c2};
}

// Equivalent form whose leading coefficient is coprime to n. Scans primitive
// (x, y) pairs by increasing height; a primitive form takes values coprime to
// any fixed n on most residue pairs, so the scan ends fast.
inline QuadForm transform_coprime(QuadForm f, i64 n) {
    auto good = [&](i64 x, i64 y) {
        if (gcd_u64(abs_u64(x), abs_u64(y)) != 1) return false;
        i64 val = eval_form(f, x, y);
        return val != 0 && gcd_u64(abs_u64(val), abs_u64(n)) == 1;
    };
    for (i64 h = 1; h <= 512; ++h) {
        for (i64 x = 0; x <= h; ++x)
            for (i64 y : {h, -h})
                if (good(x, y)) return apply_primitive_column(f, x, y);
        for (i64 y = -h + 1; y <= h - 1; ++y)
            if (good(h, y)) return apply_primitive_column(f, h, y);
    }
    throw std::logic_error("transform_coprime: no representable value coprime to n found");
}

}  // namespace detail

/// Gauss composition: reduced representative of the product class. General
/// congruence method: arrange coprime leading coefficients, solve
/// B = b1 mod 2a1, B = b2 mod 2a2, return reduce([a1*a2, B, (B^2-D)/(4a1a2)]).
inline QuadForm compose(QuadForm f, QuadForm g) {
    if (discriminant_wide(f) != discriminant_wide(g))
        throw std::invalid_argument("compose: discriminants differ");
    if (!is_primitive(f) || !is_primitive(g))
        throw std::invalid_argument("compose: forms must be primitive");
    f = reduce_form(f);
    g = reduce_form(g);
    i128 D = discriminant_wide(f);
    if (gcd_u64(abs_u64(f.a), abs_u64(g.a)) != 1) {
        g = detail::transform_coprime(g, f.a);
        if (discriminant_wide(g) != D) throw std::logic_error("compose: transform broke disc");
    }
    // B = g.b + 2*g.a*s with a1*... solve g.b + 2 g.a s = f.b (mod 2 f.a)
    i64 a1 = f.a, a2 = g.a;
    i64 diff = narrow_checked((static_cast<i128>(f.b) - g.b) / 2);
    i64 s = a1 == 1 ? 0
                    : narrow_checked(static_cast<i128>(detail::inv_mod(a2 % a1, a1)) *
                                     (((diff % a1) + a1) % a1) % a1);
    i128 mod = 2 * static_cast<i128>(a1) * a2;
    i128 B = (static_cast<i128>(g.b) + 2 * static_cast<i128>(a2) * s) % mod;
    if (B < 0) B += mod;
    i128 C = (B * B - D) / (2 * mod);
    QuadForm prod{narrow_checked(static_cast<i128>(a1) * a2), narrow_checked(B),
                  narrow_checked(C)};
    return reduce_form(prod);
}

/// Least k >= 1 with f^k principal, by iterated composition.
inline i64 class_order(QuadForm f) {
    f = reduce_form(f);
    if (!is_primitive(f)) throw std::invalid_argument("class_order: form must be primitive");
    QuadForm id = reduce_form(principal_form(discriminant(f)));
    QuadForm acc = f;
    for (i64 k = 1; k < 100000000; ++k) {
        if (acc == id) return k;
        acc = compose(acc, f);
    }
    throw std::logic_error("class_order: order not found");
}

struct ClassNumber {
    i64 h{0};
    int v2{0};
};

/// Class number of discriminant D < 0 by exhaustive reduced-form enumeration:
/// scan b of the right parity up to sqrt(|D|/3), factor (b^2 - D)/4 = a*c with
/// b <= a <= c and gcd(a, b, c) = 1. Exact and unconditional.
inline ClassNumber class_number(i64 D) {
    i64 r4 = ((D % 4) + 4) % 4;
    if (D >= 0 || (r4 != 0 && r4 != 1))
        throw std::invalid_argument("class_number: D must be negative, 0 or 1 mod 4");
    i64 h = 0;
    i64 bmax = static_cast<i64>(isqrt_u64(static_cast<u64>((-D) / 3)));
    for (i64 b = (r4 == 0 ? 0 : 1); b <= bmax; b += 2) {
        i64 m = narrow_checked((sq_i128(b) - D) / 4);
        for (i64 a = b > 0 ? b : 1; sq_i128(a) <= m; ++a) {
            if (m % a != 0) continue;
            i64 c = m / a;
            if (gcd_u64(gcd_u64(abs_u64(a), abs_u64(b)), abs_u64(c)) != 1) continue;
            h += (b == 0 || a == b || a == c) ? 1 : 2;
        }
    }
    return {h, valuation2(static_cast<u64>(h))};
}

/// True when 16 | h(-8p), read off the 2-adic valuation of the form count.
inline bool rk16_oracle(i64 p) {
    if (p < 3 || p % 4 != 3) throw std::invalid_argument("rk16_oracle: need p = -1 mod 4");
    return class_number(-8 * p).v2 >= 4;
}

}  // namespace govsym
