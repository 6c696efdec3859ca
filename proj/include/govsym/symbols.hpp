#pragma once

#include <stdexcept>

#include "govsym/chars.hpp"
#include "govsym/numtheory.hpp"
#include "govsym/quadint.hpp"
#include "govsym/represent.hpp"

namespace govsym {

/// Jacobi symbol (m/n), n odd positive.
inline Sign jacobi(i64 m, i64 n) { return sign_of(jacobi_int(m, n)); }
inline Sign jacobi(i128 m, i64 n) { return sign_of(jacobi_int(m, n)); }

/// Spin symbol [a + b*sqrt(2)] = (b/a) for totally positive input with a odd;
/// 0 when a is even. b is reduced mod a before the Jacobi call.
inline Sign spin(QuadInt w) {
    if (!is_totally_positive(w))
        throw std::invalid_argument("spin: input must be totally positive");
    if ((w.a & 1) == 0) return Sign::zero;
    return jacobi(w.b, w.a);
}

/// mu(w) = gamma(w, 1) = (a / a^2-2b^2); nonzero exactly on primitive w.
inline Sign mu(QuadInt w) {
    if (!is_odd(w)) throw std::invalid_argument("mu: norm must be odd");
    if (!is_totally_positive(w))
        throw std::invalid_argument("mu: input must be totally positive");
    return jacobi(static_cast<i128>(w.a), norm(w));
}

/// Generalized Dirichlet symbol gamma(w, z) = ((ac + 2bd) / (a^2 - 2b^2)) for
/// primitive totally positive w = a+b*sqrt2 and arbitrary z = c+d*sqrt2.
/// Multiplicative in z up to the twist mu(w); satisfies the reciprocity
/// gamma(w,z)*gamma(z,w) = mu(wz).
inline Sign gamma(QuadInt w, QuadInt z) {
    if (!is_totally_positive(w) || !is_primitive(w))
        throw std::invalid_argument("gamma: first argument must be primitive totally positive");
    i128 num = static_cast<i128>(w.a) * z.a + 2 * static_cast<i128>(w.b) * z.b;
    return jacobi(num, norm(w));
}

/// [w]_{phi,psi} = [w] * phi(-norm(w)) * psi(a).
inline GaussInt weighted_spin(QuadInt w, Char16 phi, Char16 psi) {
    Sign s = spin(w);
    if (s == Sign::zero) return kGaussZero;
    i64 neg_norm_mod16 = static_cast<i64>(((-norm_wide(w)) % 16 + 16) % 16);
    return phi(neg_norm_mod16) * psi(((w.a % 16) + 16) % 16) * s;
}

/// a_{phi,psi,n} = sum_{k=0..3} [eps^{2k} w]_{phi,psi} over the domain
/// generator w of n. Independent of which eps^{2m}-translate starts the sum.
inline GaussInt ideal_spin(const DomainPoint& n, Char16 phi, Char16 psi) {
    GaussInt total{};
    QuadInt w = n.w;
    for (int k = 0; k < 4; ++k) {
        total += weighted_spin(w, phi, psi);
        w = mul(w, kEps2);
    }
    return total;
}

/// Governing symbol <p> for a prime p = -1 mod 16: write p = u^2 - 2v^2 with
/// u > 0, u = 1 mod 16, and return (v/u). Equals +1 exactly when the class
/// number h(-8p) is divisible by 16.
inline Sign governing_symbol(i64 p) {
    if (p % 16 != 15) throw std::invalid_argument("governing_symbol: p != 15 (mod 16)");
    QuadInt w = normalize_generator(represent_prime(p), GeneratorMode::u1mod16);
    return jacobi(w.b, w.a);
}

}  // namespace govsym
