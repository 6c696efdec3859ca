#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "govsym/symbols.hpp"

using namespace govsym;

namespace {

// reference implementation straight from the recursive definition, for
// cross-checking the binary-algorithm jacobi
int slow_jacobi(i64 a, i64 n) {
    a %= n;
    if (a < 0) a += n;
    if (n == 1) return 1;
    if (a == 0) return 0;
    if (a == 1) return 1;
    if (a % 2 == 0) {
        int two = (n % 8 == 1 || n % 8 == 7) ? 1 : -1;
        return two * slow_jacobi(a / 2, n);
    }
    int flip = (a % 4 == 3 && n % 4 == 3) ? -1 : 1;
    return flip * slow_jacobi(n % a, a);
}

}  // namespace

TEST_CASE("jacobi worked values") {
    CHECK(jacobi(i64{7}, 15) == Sign::minus);
    CHECK(jacobi(i64{1743}, 2465) == Sign::plus);
    // cross-check by factoring 2465 = 5 * 17 * 29
    CHECK(jacobi(i64{1743}, 5) * jacobi(i64{1743}, 17) * jacobi(i64{1743}, 29) == Sign::plus);
    CHECK(jacobi(i64{1743}, 5) == Sign::minus);
    CHECK(jacobi(i64{1743}, 17) == Sign::plus);
    CHECK(jacobi(i64{1743}, 29) == Sign::minus);
    CHECK(jacobi(i64{0}, 1) == Sign::plus);  // empty product
    CHECK(jacobi(i64{33}, 9999) == Sign::zero);
    CHECK_THROWS_AS(jacobi(i64{3}, 10), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(i64{3}, -7), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(i64{3}, 0), std::invalid_argument);
}

TEST_CASE("jacobi agrees with the recursive definition") {
    for (i64 n = 1; n <= 301; n += 2)
        for (i64 m = -30; m <= 300; ++m)
            CHECK(to_int(jacobi(m, n)) == slow_jacobi(m, n));
}

TEST_CASE("jacobi is multiplicative and periodic in the numerator") {
    for (i64 n = 3; n <= 151; n += 2)
        for (i64 m1 = -8; m1 <= 20; m1 += 3)
            for (i64 m2 = 1; m2 <= 25; m2 += 4) {
                CHECK(jacobi(m1 * m2, n) == jacobi(m1, n) * jacobi(m2, n));
                CHECK(jacobi(m1 + n, n) == jacobi(m1, n));
            }
}

TEST_CASE("spin symbol") {
    CHECK(spin({15, 7}) == Sign::minus);
    CHECK(spin({2465, 1743}) == Sign::plus);
    CHECK(spin({4, 1}) == Sign::zero);  // even leading coordinate
    CHECK(spin({1, 0}) == Sign::plus);  // (0/1) = +1
    CHECK(spin({15, -7}) == Sign::plus);  // negative b reduces mod a: (8/15) = +1
    CHECK_THROWS_AS(spin({1, 1}), std::invalid_argument);
}

TEST_CASE("Char16 table") {
    CHECK(kChiKernelPm1(15) == kGaussOne);
    CHECK(kChiKernelPm1(1) == kGaussOne);
    CHECK(kChiKernelPm1(7) == GaussInt{-1, 0});
    CHECK(kChiKernelPm1(9) == GaussInt{-1, 0});
    CHECK(kChiKernelPm1(3) == GaussInt{0, 1});  // fixed orientation chi(3) = i
    CHECK(kTrivialChar(12345) == kGaussOne);
    CHECK(kTrivialChar(2) == kGaussZero);  // zero off the units
    CHECK(char_eval(Char16{1, 2}, 16) == kGaussZero);
}

TEST_CASE("eight distinct multiplicative characters") {
    auto chars = all_chars();
    std::set<std::array<std::pair<i64, i64>, 8>> tables;
    for (Char16 c : chars) {
        std::array<std::pair<i64, i64>, 8> table{};
        int i = 0;
        for (i64 r = 1; r < 16; r += 2) {
            GaussInt v = c(r);
            table[static_cast<std::size_t>(i++)] = {v.re, v.im};
        }
        tables.insert(table);
        for (i64 r1 = 1; r1 < 16; r1 += 2)
            for (i64 r2 = 1; r2 < 16; r2 += 2) CHECK(c(r1 * r2) == c(r1) * c(r2));
    }
    CHECK(tables.size() == 8);
}

TEST_CASE("character completeness: sum over all 8 detects r = 1 mod 16") {
    for (i64 r = 1; r < 16; r += 2) {
        GaussInt total{};
        for (Char16 c : all_chars()) total += c(r);
        CHECK(total == (r == 1 ? GaussInt{8, 0} : kGaussZero));
    }
}

TEST_CASE("mu symbol") {
    CHECK(mu({3, 1}) == Sign::minus);  // (3/7), squares mod 7 are {1,2,4}
    CHECK(mu({1, 0}) == Sign::plus);
    CHECK(mu({7, 0}) == Sign::zero);  // non-primitive
    CHECK_THROWS_AS(mu({2, 1}), std::invalid_argument);
}

TEST_CASE("gamma symbol") {
    CHECK(gamma({3, 1}, {1, 0}) == mu({3, 1}));
    CHECK(gamma({3, 1}, {5, 1}) == Sign::minus);  // jacobi(17, 7) = jacobi(3, 7)
    CHECK_THROWS_AS(gamma({7, 0}, {1, 0}), std::invalid_argument);   // non-primitive
    CHECK_THROWS_AS(gamma({-3, 1}, {1, 0}), std::invalid_argument);  // not totally positive
    // periodicity: gamma(w, z + norm(w)*y) = gamma(w, z)
    QuadInt w{5, 1};
    for (i64 za = -6; za <= 6; za += 2)
        for (i64 ya = -2; ya <= 2; ++ya)
            for (i64 yb = -2; yb <= 2; ++yb) {
                QuadInt z{za, za + 1};
                QuadInt shifted = z + mul({norm(w), 0}, {ya, yb});
                CHECK(gamma(w, z) == gamma(w, shifted));
            }
}

TEST_CASE("weighted spin") {
    CHECK(weighted_spin({15, 7}, kTrivialChar, kTrivialChar) == GaussInt{-1, 0});
    // phi = chi, psi trivial: phi(-127 mod 16) = phi(1) = 1
    CHECK(weighted_spin({15, 7}, kChiKernelPm1, kTrivialChar) == GaussInt{-1, 0});
    for (Char16 phi : all_chars())
        for (Char16 psi : all_chars()) CHECK(weighted_spin({4, 1}, phi, psi) == kGaussZero);
}

TEST_CASE("ideal spin on the norm-127 ideal") {
    DomainPoint n({15, 7});
    // the four translate spins are (-1, -1, +1, +1)
    CHECK(spin({15, 7}) == Sign::minus);
    CHECK(spin({73, 51}) == Sign::minus);
    CHECK(spin({423, 299}) == Sign::plus);
    CHECK(spin({2465, 1743}) == Sign::plus);
    CHECK(ideal_spin(n, kTrivialChar, kTrivialChar) == kGaussZero);
    // (1/64) * sum over all 64 character pairs = <127> = +1
    GaussInt total{};
    for (Char16 phi : all_chars())
        for (Char16 psi : all_chars()) total += ideal_spin(n, phi, psi);
    CHECK(total == GaussInt{64, 0});
}

TEST_CASE("ideal spin vanishes on even ideals") {
    DomainPoint ramified({2, 1});
    for (Char16 phi : all_chars())
        for (Char16 psi : all_chars()) CHECK(ideal_spin(ramified, phi, psi) == kGaussZero);
}

TEST_CASE("character average picks out p = -1 mod 16") {
    // prime ideals above p = 7 and p = 17 average to zero
    for (QuadInt w : {QuadInt{3, 1}, QuadInt{5, 2}}) {
        GaussInt total{};
        for (Char16 phi : all_chars())
            for (Char16 psi : all_chars()) total += ideal_spin(DomainPoint(w), phi, psi);
        CHECK(total == kGaussZero);
    }
}

TEST_CASE("governing symbol") {
    CHECK(governing_symbol(127) == Sign::plus);
    CHECK(governing_symbol(223) == Sign::plus);
    CHECK(governing_symbol(479) == Sign::plus);
    CHECK(governing_symbol(719) == Sign::plus);
    CHECK(governing_symbol(31) == Sign::minus);   // h(-248) = 8, 16 does not divide
    CHECK(governing_symbol(47) == Sign::minus);
    CHECK(governing_symbol(79) == Sign::minus);
    CHECK_THROWS_AS(governing_symbol(17), std::invalid_argument);
    CHECK_THROWS_AS(governing_symbol(7), std::invalid_argument);
}
