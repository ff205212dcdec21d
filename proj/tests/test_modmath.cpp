#include <doctest.h>

#include <random>

#include "lcdbch/error.hpp"
#include "lcdbch/modmath.hpp"
#include "oracles.hpp"

using namespace lcdbch;

TEST_CASE("nu2 on small values") {
    CHECK(nu2(u64{8}) == 3);
    CHECK(nu2(u64{12}) == 2);
    CHECK(nu2(u64{1}) == 0);
    CHECK_THROWS_AS(nu2(u64{0}), InvalidInput);
    CHECK(nu2(BigUint(1) << 100) == 100);
    for (u64 b = 1; b < 2000; ++b) {
        CHECK(nu2(2 * b) == nu2(b) + 1);
        if (b % 2 == 1) CHECK(nu2(b) == 0);
    }
}

TEST_CASE("even decomposition") {
    auto d16 = even_decompose(16);
    CHECK(d16.power_of_two);
    CHECK(d16.nu == 4);
    auto d12 = even_decompose(12);
    CHECK_FALSE(d12.power_of_two);
    CHECK(d12.nu == 2);
    CHECK(12 % 8 == 4);
    auto d6 = even_decompose(6);
    CHECK_FALSE(d6.power_of_two);
    CHECK(d6.nu == 1);
    CHECK_THROWS_AS(even_decompose(7), InvalidInput);
    CHECK_THROWS_AS(even_decompose(0), InvalidInput);
}

TEST_CASE("multiplicative order against successive powers") {
    // 82 = 3^4 + 1, so 3^4 = -1 and the order is 2m = 8.
    CHECK(ord_mod(3, 82) == oracle::order(3, 82));
    CHECK(ord_mod(3, 82) == 8);
    CHECK(ord_mod(3, 2) == 1);
    CHECK(ord_mod(3, 730) == oracle::order(3, 730));
    CHECK(ord_mod(3, 730) == 12);
    CHECK_THROWS_AS(ord_mod(3, 81), InvalidInput);
    for (u64 q : {3, 5, 7, 9, 11, 13})
        for (unsigned m = 1; m <= 7; ++m) {
            const u64 n = static_cast<u64>(oracle::ipow(q, m)) + 1;
            CHECK(ord_mod(q, n) == 2 * u64{m});
            CHECK(ord_mod(q, n) == oracle::order(q, n));
        }
    for (u64 n = 2; n < 400; ++n)
        if (n % 2 != 0) CHECK(ord_mod(2, n) == oracle::order(2, n));
}

TEST_CASE("prime powers") {
    PrimePower p9(9);
    CHECK(p9.p() == 3);
    CHECK(p9.e() == 2);
    CHECK(PrimePower(125).e() == 3);
    CHECK(PrimePower(2, 10).q() == 1024);
    CHECK_THROWS_AS(PrimePower(12), InvalidInput);
    CHECK_THROWS_AS(PrimePower(1), InvalidInput);
    CHECK(is_prime(1'000'000'007));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("gcd(b^u+1, b^v-1) case split") {
    CHECK(gcd_plus_minus(3, 2, 4) == 10);
    CHECK(gcd_plus_minus(2, 1, 1) == 1);
    CHECK(gcd_plus_minus(3, 1, 1) == 2);
}

TEST_CASE("gcd(b^u+1, b^v+1) case split") {
    CHECK(gcd_plus_plus(3, 1, 2) == 2);
    CHECK(gcd_plus_plus(3, 2, 2) == 10);
    CHECK(gcd_plus_plus(2, 1, 3) == 3);
}

TEST_CASE("gcd identities on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> bd(2, 20), ud(1, 12);
    for (int i = 0; i < 1000; ++i) {
        const u64 b = bd(rng), u = ud(rng), v = ud(rng);
        CHECK(gcd_plus_minus(b, u, v) == oracle::euclid(oracle::ipow(b, u) + 1, oracle::ipow(b, v) - 1));
        const u64 b2 = bd(rng), u2 = ud(rng), v2 = ud(rng);
        CHECK(gcd_plus_plus(b2, u2, v2) == oracle::euclid(oracle::ipow(b2, u2) + 1, oracle::ipow(b2, v2) + 1));
    }
}

TEST_CASE("remainder") {
    // Qualified: ::remainder(double, double) from <cmath> would win on int literals.
    CHECK(lcdbch::remainder(BigUint(10), BigUint(3)) == 1);
    CHECK(lcdbch::remainder(BigUint(7), BigUint(7)) == 0);
    // long division of 103664 by 243
    CHECK(lcdbch::remainder(BigUint(103664), BigUint(243)) == 103664 - 243 * 426);
    CHECK(lcdbch::remainder(BigUint(-1), BigUint(5)) == 4);
    CHECK_THROWS_AS(lcdbch::remainder(BigUint(5), BigUint(0)), InvalidInput);
}

TEST_CASE("Psi values and recursion") {
    CHECK(psi(3, -1) == 1);
    CHECK(psi(3, 0) == 2);
    CHECK(psi(3, 1) == 16);
    CHECK(psi(5, -3) == 2);
    CHECK_THROWS_AS(psi(4, 1), InvalidInput);
    for (u64 q : {3, 5, 7, 9, 11})
        for (int x = 1; x <= 4; ++x) CHECK(psi(q, x) == psi(q, x - 1) * (oracle::ipow(q, u64{1} << x) - 1));
}

TEST_CASE("Phi terms") {
    CHECK(phi_term(3, 1) == 6561 - 2187 + 243 - 81 + 27 - 3);
    CHECK(phi_term(3, 1) == 4560);
    CHECK(phi_term(5, 1) == 390625 - 78125 + 3125 - 625 + 125 - 5);
    CHECK_THROWS_AS(phi_term(3, 0), InvalidInput);
    for (u64 q : {3, 5, 7})
        for (u64 j = 1; j <= 4; ++j) CHECK(phi_term(q, j) > 0);
}

TEST_CASE("big helpers") {
    CHECK(big_pow(3, 41) == oracle::ipow(3, 41));
    CHECK(to_string(big_pow(3, 41) + 1) == "36472996377170786404");
    CHECK_THROWS_AS(to_u64(big_pow(2, 64)), InvalidInput);
    CHECK(parse_big("123456789012345678901234567890") == BigUint("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_big("12a"), InvalidInput);
    CHECK_THROWS_AS(parse_big(""), InvalidInput);
}
