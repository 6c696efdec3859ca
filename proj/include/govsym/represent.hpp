#pragma once

#include <stdexcept>

#include "govsym/numtheory.hpp"
#include "govsym/quadint.hpp"

namespace govsym {

/// Square root of 2 mod p for an odd prime p = +-1 mod 8. Uses the closed form
/// 2^((p+1)/4) when p = 7 mod 8, Tonelli-Shanks otherwise.
inline i64 sqrt2_mod(i64 p) {
    i64 r8 = p % 8;
    if (p < 3 || (r8 != 1 && r8 != 7))
        throw std::invalid_argument("sqrt2_mod: 2 is a non-residue unless p = +-1 mod 8");
    u64 t = r8 == 7 ? powmod(2, static_cast<u64>((p + 1) / 4), static_cast<u64>(p))
                    : sqrt_mod(2, static_cast<u64>(p));
    return static_cast<i64>(t);
}

/// Solve p = a^2 - 2b^2 for a split prime p: the generator of one prime ideal
/// above p, computed as gcd(p, t - sqrt(2)) and canonicalized to the domain
/// representative with b >= 0.
inline QuadInt represent_prime(i64 p) {
    i64 r8 = p % 8;
    if (p < 3 || (r8 != 1 && r8 != 7))
        throw std::invalid_argument("represent_prime: p is inert unless p = +-1 mod 8");
    i64 t = sqrt2_mod(p);
    QuadInt g = gcd(QuadInt{p, 0}, QuadInt{t, -1});
    if (norm_wide(g) != p)
        throw std::invalid_argument("represent_prime: input is not a split prime");
    if (g.b < 0) g = conj(g);  // both conjugates lie in D when the norm is odd
    return g;
}

enum class GeneratorMode { u1mod16, v1mod4 };

/// Normalize a totally positive generator within its unit orbit.
///   u1mod16: the unique eps^{2k}-translate (k in 0..3) with a = 1 mod 16;
///            requires norm = -1 mod 16.
///   v1mod4:  flips the sign of b so b = 1 mod 4; requires b odd.
inline QuadInt normalize_generator(QuadInt w, GeneratorMode mode) {
    if (!is_totally_positive(w) || !is_odd(w))
        throw std::invalid_argument("normalize_generator: need totally positive odd input");
    if (mode == GeneratorMode::v1mod4) {
        if ((w.b & 1) == 0)
            throw std::invalid_argument("normalize_generator: v1mod4 needs odd b");
        return ((w.b % 4) + 4) % 4 == 1 ? w : conj(w);
    }
    if (((norm_wide(w) % 16) + 16) % 16 != 15)
        throw std::invalid_argument("normalize_generator: u1mod16 needs norm = -1 mod 16");
    for (int k = 0; k < 4; ++k) {
        if (((w.a % 16) + 16) % 16 == 1) return w;
        w = mul(w, kEps2);
    }
    throw std::invalid_argument("normalize_generator: no translate with a = 1 mod 16");
}

}  // namespace govsym
