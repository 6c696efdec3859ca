#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "govsym/common.hpp"
#include "govsym/numtheory.hpp"

namespace govsym {

/// Element a + b*sqrt(2) of Z[sqrt(2)]. Coordinates are 64-bit; every product
/// and norm goes through exact 128-bit intermediates and reports overflow
/// instead of wrapping.
struct QuadInt {
    i64 a{0};  // coefficient of 1
    i64 b{0};  // coefficient of sqrt(2)

    constexpr QuadInt() = default;
    constexpr QuadInt(i64 a_, i64 b_) : a(a_), b(b_) {}

    friend constexpr bool operator==(QuadInt, QuadInt) = default;

    friend std::ostream& operator<<(std::ostream& os, QuadInt w) {
        os << w.a;
        if (w.b >= 0)
            os << "+" << w.b;
        else
            os << w.b;
        return os << "*sqrt2";
    }
};

inline constexpr QuadInt kFundamentalUnit{1, 1};     // eps = 1 + sqrt(2), norm -1
inline constexpr QuadInt kFundamentalUnitInv{-1, 1}; // eps^-1 = -1 + sqrt(2)
inline constexpr QuadInt kEps2{3, 2};                // eps^2, generator of totally positive units
inline constexpr QuadInt kEps2Inv{3, -2};

inline QuadInt mul(QuadInt w, QuadInt z) {
    i128 ac = static_cast<i128>(w.a) * z.a;
    i128 bd = static_cast<i128>(w.b) * z.b;
    i128 ad = static_cast<i128>(w.a) * z.b;
    i128 bc = static_cast<i128>(w.b) * z.a;
    return {narrow_checked(add_checked(ac, add_checked(bd, bd))),
            narrow_checked(add_checked(ad, bc))};
}

inline QuadInt operator*(QuadInt w, QuadInt z) { return mul(w, z); }

inline QuadInt operator+(QuadInt w, QuadInt z) {
    return {narrow_checked(static_cast<i128>(w.a) + z.a),
            narrow_checked(static_cast<i128>(w.b) + z.b)};
}

inline QuadInt operator-(QuadInt w, QuadInt z) {
    return {narrow_checked(static_cast<i128>(w.a) - z.a),
            narrow_checked(static_cast<i128>(w.b) - z.b)};
}

inline QuadInt operator-(QuadInt w) { return {neg_checked(w.a), neg_checked(w.b)}; }

inline QuadInt conj(QuadInt w) { return {w.a, neg_checked(w.b)}; }

/// a^2 - 2b^2 as an exact 128-bit value; cannot overflow for 64-bit coordinates.
inline i128 norm_wide(QuadInt w) noexcept { return sq_i128(w.a) - 2 * sq_i128(w.b); }

inline i64 norm(QuadInt w) { return narrow_checked(norm_wide(w)); }

inline bool is_zero(QuadInt w) noexcept { return w.a == 0 && w.b == 0; }

/// Both real embeddings positive: a > 0 and a^2 - 2b^2 > 0.
inline bool is_totally_positive(QuadInt w) noexcept { return w.a > 0 && norm_wide(w) > 0; }

inline bool is_odd(QuadInt w) noexcept { return (w.a & 1) != 0; }  // norm parity = parity of a

/// Odd norm and gcd(a, b) = 1; equivalently (w) is coprime to its conjugate.
inline bool is_primitive(QuadInt w) noexcept {
    return is_odd(w) && gcd_u64(abs_u64(w.a), abs_u64(w.b)) == 1;
}

/// Generator lying in the fundamental domain D = {a > 0, -a < 2b <= a}.
/// Every nonzero ideal of Z[sqrt(2)] has exactly one generator in D.
struct DomainPoint {
    QuadInt w;

    explicit DomainPoint(QuadInt w_) : w(w_) {
        if (!(w.a > 0 && -static_cast<i128>(w.a) < 2 * static_cast<i128>(w.b) &&
              2 * static_cast<i128>(w.b) <= static_cast<i128>(w.a)))
            throw std::invalid_argument("DomainPoint: not in fundamental domain");
    }

    friend bool operator==(const DomainPoint&, const DomainPoint&) = default;
};

inline bool in_domain(QuadInt w) noexcept {
    return w.a > 0 && -static_cast<i128>(w.a) < 2 * static_cast<i128>(w.b) &&
           2 * static_cast<i128>(w.b) <= static_cast<i128>(w.a);
}

/// eps^k * w by exact repeated multiplication (eps^-1 = -1 + sqrt(2)).
inline QuadInt unit_times(QuadInt w, int k) {
    QuadInt step = k >= 0 ? kFundamentalUnit : kFundamentalUnitInv;
    int n = k >= 0 ? k : -k;
    for (int i = 0; i < n; ++i) w = mul(w, step);
    return w;
}

/// Unique (d, k) with d = eps^{2k} * w in D, for totally positive w.
inline std::pair<DomainPoint, int> reduce_to_domain(QuadInt w) {
    if (!is_totally_positive(w))
        throw std::invalid_argument("reduce_to_domain: input must be totally positive");
    int k = 0;
    while (!in_domain(w)) {
        if (2 * static_cast<i128>(w.b) > static_cast<i128>(w.a)) {
            w = mul(w, kEps2Inv);
            --k;
        } else {
            w = mul(w, kEps2);
            ++k;
        }
    }
    return {DomainPoint(w), k};
}

/// Quotient-with-remainder: w = q*d + r, |norm(r)| < |norm(d)|. The quotient is
/// w * conj(d) / norm(d) with both coordinates rounded to nearest; exact halves
/// round toward -infinity so the division is deterministic.
inline std::pair<QuadInt, QuadInt> euclid_divmod(QuadInt w, QuadInt d) {
    if (is_zero(d)) throw std::domain_error("euclid_divmod: division by zero");
    i128 n = norm_wide(d);
    i128 x = static_cast<i128>(w.a) * d.a - 2 * static_cast<i128>(w.b) * d.b;
    i128 y = static_cast<i128>(w.b) * d.a - static_cast<i128>(w.a) * d.b;
    auto round_nearest = [](i128 num, i128 den) -> i128 {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 q = num / den;
        i128 rem = num % den;
        if (rem < 0) {
            q -= 1;
            rem += den;
        }
        if (2 * rem > den) q += 1;  // ties (2*rem == den) stay at floor
        return q;
    };
    i128 qa = round_nearest(x, n);
    i128 qb = round_nearest(y, n);
    QuadInt q{narrow_checked(qa), narrow_checked(qb)};
    QuadInt r{narrow_checked(static_cast<i128>(w.a) - (qa * d.a + 2 * qb * d.b)),
              narrow_checked(static_cast<i128>(w.b) - (qa * d.b + qb * d.a))};
    return {q, r};
}

/// Euclidean gcd, unit-normalized to the canonical D generator: a negative-norm
/// result is multiplied by eps once (norm flips sign), a negative leading
/// coordinate is negated, then the result is reduced into D.
inline QuadInt gcd(QuadInt w, QuadInt z) {
    if (is_zero(w) && is_zero(z)) throw std::invalid_argument("gcd(0, 0) is undefined");
    while (!is_zero(z)) {
        auto [q, r] = euclid_divmod(w, z);
        (void)q;
        w = z;
        z = r;
    }
    if (norm_wide(w) < 0) w = mul(w, kFundamentalUnit);
    if (w.a < 0) w = -w;
    return reduce_to_domain(w).first.w;
}

inline bool divides(QuadInt d, QuadInt w) {
    if (is_zero(d)) return is_zero(w);
    auto [q, r] = euclid_divmod(w, d);
    (void)q;
    return is_zero(r);
}

/// Visits every (a, b) with a > 0, -a < 2b <= a, 0 < a^2 - 2b^2 <= X in
/// lexicographic (a, b) order, restricted to a in [a_lo, a_hi]. The a-interval
/// split is what range-partitioned parallel consumers use.
template <class F>
inline void for_each_domain_point(i64 a_lo, i64 a_hi, i64 X, F&& fn) {
    if (X < 1) throw std::invalid_argument("enumerate_domain: X must be >= 1");
    for (i64 a = std::max<i64>(a_lo, 1); a <= a_hi; ++a) {
        i64 hi = a / 2;
        i64 lo = -((a - 1) / 2);
        i128 t = sq_i128(a) - X;
        if (t <= 0) {
            for (i64 b = lo; b <= hi; ++b) fn(QuadInt{a, b});
            continue;
        }
        // need 2b^2 >= a^2 - X, i.e. |b| >= bmin
        u128 need = static_cast<u128>(t);
        i64 bmin = static_cast<i64>(isqrt_u128(need / 2));
        while (2 * sq_i128(bmin) < t) ++bmin;
        if (bmin > hi && bmin > -lo) continue;  // no b qualifies
        for (i64 b = lo; b <= -bmin && b <= hi; ++b) fn(QuadInt{a, b});
        for (i64 b = std::max(lo, bmin); b <= hi; ++b) fn(QuadInt{a, b});
    }
}

/// Upper a bound for domain points of norm <= X (min norm in column a is
/// a^2 - 2*floor(a/2)^2).
inline i64 domain_a_limit(i64 X) {
    i64 a = 1;
    while (sq_i128(a + 1) - 2 * sq_i128((a + 1) / 2) <= X) ++a;
    return a;
}

template <class F>
inline void for_each_domain_point(i64 X, F&& fn) {
    for_each_domain_point(1, domain_a_limit(X), X, std::forward<F>(fn));
}

inline std::vector<DomainPoint> domain_points(i64 X) {
    std::vector<DomainPoint> out;
    for_each_domain_point(X, [&](QuadInt w) { out.emplace_back(w); });
    return out;
}

/// Lattice count of {(a, b) in D : norm <= X} without materializing points.
inline i64 count_domain_points(i64 X) {
    if (X < 1) throw std::invalid_argument("count_domain_points: X must be >= 1");
    i64 total = 0;
    i64 amax = domain_a_limit(X);
    for (i64 a = 1; a <= amax; ++a) {
        i64 hi = a / 2;
        i64 lo = -((a - 1) / 2);
        i128 t = sq_i128(a) - X;
        if (t <= 0) {
            total += hi - lo + 1;
            continue;
        }
        u128 need = static_cast<u128>(t);
        i64 bmin = static_cast<i64>(isqrt_u128(need / 2));
        while (2 * sq_i128(bmin) < t) ++bmin;
        if (bmin <= hi) total += hi - bmin + 1;
        if (-bmin >= lo) total += -bmin - lo + 1;
    }
    return total;
}

}  // namespace govsym
