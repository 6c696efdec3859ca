#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "govsym/sieve.hpp"

using namespace govsym;

TEST_CASE("small primes") {
    CHECK(primes_up_to(10) == std::vector<i64>{2, 3, 5, 7});
    CHECK(primes_up_to(1) == std::vector<i64>{});
    std::vector<i64> seg;
    for_each_prime(10, [&](i64 p) { seg.push_back(p); });
    CHECK(seg == std::vector<i64>{2, 3, 5, 7});
    CHECK_THROWS_AS(for_each_prime(1, [](i64) {}), std::invalid_argument);
}

TEST_CASE("segmented sieve agrees with the simple sieve element-wise") {
    auto simple = primes_up_to(100000);
    std::vector<i64> seg;
    for_each_prime(100000, [&](i64 p) { seg.push_back(p); });
    CHECK(seg == simple);
}

TEST_CASE("segmented window matches a filtered simple sieve") {
    auto simple = primes_up_to(1100000);
    std::vector<i64> expect;
    for (i64 p : simple)
        if (p >= 1000000) expect.push_back(p);
    std::vector<i64> got;
    for_each_prime_in(1000000, 1100000, [&](i64 p) { got.push_back(p); });
    CHECK(got == expect);
}

TEST_CASE("prime counting checkpoints") {
    CHECK(prime_count(1000) == 168);
    CHECK(prime_count(1000000) == 78498);
    CHECK(prime_count(10000000) == 664579);
}
