#include <doctest.h>

#include <random>
#include <set>

#include "apollo/exact.hpp"

using namespace apollo;

TEST_CASE("isqrt on small and known values") {
    CHECK(isqrt(Int(0)).root == 0);
    CHECK(isqrt(Int(0)).exact);
    CHECK(isqrt(Int(529)).root == 23);
    CHECK(isqrt(Int(529)).exact);
    CHECK(isqrt(Int(2304)).root == 48);   // 11*14 + 14*86 + 86*11
    CHECK(isqrt(Int(2304)).exact);
    CHECK(isqrt(Int(2)).root == 1);
    CHECK_FALSE(isqrt(Int(2)).exact);
    CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt bound property against an independent oracle") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 2000; ++trial) {
        Int n = Int(rng()) % 1000000;
        if (trial % 3 == 0) {
            n *= n;  // plenty of exact squares in the mix
        }
        if (trial % 5 == 0) {
            n = n * n * n + Int(rng() % 97);  // push past 64 bits
        }
        auto r = isqrt(n);
        CHECK(r.root * r.root <= n);
        CHECK((r.root + 1) * (r.root + 1) > n);
        CHECK(r.exact == (r.root * r.root == n));
        CHECK(r.root == boost::multiprecision::sqrt(n));
    }
}

TEST_CASE("perfect_square") {
    CHECK_FALSE(perfect_square(Int(3)).has_value());
    CHECK(perfect_square(Int(1)) == Int(1));
    CHECK(perfect_square(Int(0)) == Int(0));
    CHECK(perfect_square(Int(-4)) == std::nullopt);
    CHECK(perfect_square(Int(36)) == Int(6));
}

TEST_CASE("gcd_all") {
    CHECK(gcd_all({Int(-6), Int(11), Int(14), Int(15)}) == 1);
    CHECK(gcd_all({Int(0), Int(0), Int(1)}) == 1);
    CHECK(gcd_all({Int(4), Int(8), Int(12)}) == 4);
    CHECK(gcd_all({Int(0), Int(0)}) == 0);
    CHECK_THROWS_AS(gcd_all({}), std::invalid_argument);
}

TEST_CASE("two_squares canonical decompositions") {
    CHECK(two_squares(Int(5)) == std::make_pair(Int(1), Int(2)));
    CHECK(two_squares(Int(29)) == std::make_pair(Int(2), Int(5)));
    CHECK_FALSE(two_squares(Int(7)).has_value());
    CHECK(two_squares(Int(0)) == std::make_pair(Int(0), Int(0)));
    CHECK(two_squares(Int(2)) == std::make_pair(Int(1), Int(1)));
    CHECK(two_squares(Int(25)) == std::make_pair(Int(0), Int(5)));  // minimal p
    CHECK_THROWS_AS(two_squares(Int(-1)), std::domain_error);
}

TEST_CASE("two_squares against brute-force enumeration up to 10^4") {
    std::set<long> representable;
    for (long p = 0; p <= 100; ++p) {
        for (long q = p; p * p + q * q <= 10000; ++q) {
            representable.insert(p * p + q * q);
        }
    }
    for (long n = 0; n <= 10000; ++n) {
        auto d = two_squares(Int(n));
        CHECK(d.has_value() == (representable.count(n) > 0));
        if (d) {
            CHECK(d->first * d->first + d->second * d->second == n);
            CHECK(d->first <= d->second);
        }
    }
}

TEST_CASE("fibonacci values and identities") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(6) == 8);
    CHECK(fibonacci(13) == 233);
    CHECK_THROWS_AS(fibonacci(-1), std::domain_error);
    for (long n = 1; n <= 30; ++n) {
        CHECK(fibonacci(n + 1) == fibonacci(n) + fibonacci(n - 1));
    }
    // Cassini at odd split: F_{2n+1} F_{2n-1} - F_{2n}^2 = 1.
    for (long n = 1; n <= 15; ++n) {
        CHECK(fibonacci(2 * n + 1) * fibonacci(2 * n - 1) -
                  fibonacci(2 * n) * fibonacci(2 * n) ==
              1);
    }
}
