#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "govsym/common.hpp"

namespace govsym {

/// Value of a quadratic symbol: -1, 0 or +1. Closed under multiplication,
/// 0 absorbs.
enum class Sign : int { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign sign_of(int v) {
    return v > 0 ? Sign::plus : (v < 0 ? Sign::minus : Sign::zero);
}

constexpr Sign operator*(Sign x, Sign y) { return sign_of(to_int(x) * to_int(y)); }

inline std::ostream& operator<<(std::ostream& os, Sign s) { return os << to_int(s); }

/// Gaussian integer x + y*i; exact carrier for fourth-roots-of-unity character
/// values and their sums.
struct GaussInt {
    i64 re{0};
    i64 im{0};

    friend constexpr bool operator==(GaussInt, GaussInt) = default;

    friend constexpr GaussInt operator+(GaussInt x, GaussInt y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend constexpr GaussInt operator-(GaussInt x, GaussInt y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend constexpr GaussInt operator-(GaussInt x) { return {-x.re, -x.im}; }
    friend constexpr GaussInt operator*(GaussInt x, GaussInt y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend constexpr GaussInt operator*(GaussInt x, Sign s) {
        return {x.re * to_int(s), x.im * to_int(s)};
    }
    friend constexpr GaussInt operator*(Sign s, GaussInt x) { return x * s; }

    constexpr GaussInt& operator+=(GaussInt y) {
        re += y.re;
        im += y.im;
        return *this;
    }

    friend std::ostream& operator<<(std::ostream& os, GaussInt z) {
        return os << z.re << (z.im >= 0 ? "+" : "") << z.im << "i";
    }
};

inline constexpr GaussInt kGaussZero{0, 0};
inline constexpr GaussInt kGaussOne{1, 0};

constexpr GaussInt fourth_root(int k) {  // i^k
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

namespace detail {

// (Z/16)^x = <-1> x <3>: odd r = (-1)^sigma * 3^tau mod 16.
struct Decomp16 {
    std::array<std::uint8_t, 16> sigma{};
    std::array<std::uint8_t, 16> tau{};
};

constexpr Decomp16 make_decomp16() {
    Decomp16 d{};
    int x = 1;
    for (int t = 0; t < 4; ++t) {
        d.sigma[static_cast<std::size_t>(x)] = 0;
        d.tau[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(t);
        d.sigma[static_cast<std::size_t>(16 - x)] = 1;
        d.tau[static_cast<std::size_t>(16 - x)] = static_cast<std::uint8_t>(t);
        x = (x * 3) % 16;
    }
    return d;
}

inline constexpr Decomp16 kDecomp16 = make_decomp16();

}  // namespace detail

/// Dirichlet character mod 16, one of eight: on odd r = (-1)^sigma * 3^tau,
/// value (-1)^(s*sigma) * i^(t*tau); zero on even r. The orientation fixes
/// chi(3) = i for the (s,t) = (0,1) character, whose kernel is {+-1}.
struct Char16 {
    std::uint8_t s{0};  // in {0, 1}
    std::uint8_t t{0};  // in {0, 1, 2, 3}

    constexpr GaussInt operator()(i64 r) const {
        if ((r & 1) == 0) return kGaussZero;
        auto idx = static_cast<std::size_t>(((r % 16) + 16) % 16);
        int sigma = detail::kDecomp16.sigma[idx];
        int tau = detail::kDecomp16.tau[idx];
        GaussInt v = fourth_root(t * tau);
        return (s * sigma) % 2 == 1 ? -v : v;
    }

    friend constexpr bool operator==(Char16, Char16) = default;

    std::string name() const { return std::to_string(int(s)) + std::to_string(int(t)); }
};

inline GaussInt char_eval(Char16 c, i64 r) { return c(r); }

inline constexpr Char16 kTrivialChar{0, 0};
inline constexpr Char16 kChiKernelPm1{0, 1};  // chi(+-1) = 1, chi(+-7) = -1

constexpr std::array<Char16, 8> all_chars() {
    std::array<Char16, 8> out{};
    std::size_t n = 0;
    for (std::uint8_t s = 0; s < 2; ++s)
        for (std::uint8_t t = 0; t < 4; ++t) out[n++] = Char16{s, t};
    return out;
}

}  // namespace govsym
