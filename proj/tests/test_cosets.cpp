#include <doctest.h>

#include <numeric>

#include "lcdbch/cosets.hpp"
#include "lcdbch/error.hpp"
#include "oracles.hpp"

using namespace lcdbch;

TEST_CASE("coset_of on n = 82") {
    const CosetContext ctx(3, 82);
    CHECK(ctx.ord() == 8);
    CHECK(ctx.antipodal());
    const Coset c0 = coset_of(ctx, 0, true);
    CHECK(c0.size == 1);
    CHECK(c0.elements == std::vector<u64>{0});
    const Coset c41 = coset_of(ctx, 41);
    CHECK(c41.leader == 41);
    CHECK(c41.size == 1);
    const Coset c1 = coset_of(ctx, 1, true);
    CHECK(c1.size == 8);
    CHECK(c1.elements.size() == 8);
    CHECK_THROWS_AS(coset_of(ctx, 82), InvalidInput);
    CHECK_THROWS_AS(CosetContext(3, 81), InvalidInput);
}

TEST_CASE("brute-force leader test") {
    const CosetContext ctx(3, 82);
    CHECK(is_leader_bruteforce(ctx, 41));
    CHECK_FALSE(is_leader_bruteforce(ctx, 3));
    CHECK(is_leader_bruteforce(ctx, 16));
    CHECK(is_leader_bruteforce(ctx, 0));
    for (u64 s = 0; s < 82; ++s) CHECK(is_leader_bruteforce(ctx, s) == oracle::is_leader(3, 82, s));
}

TEST_CASE("cosets partition Z_n and sizes divide the order") {
    for (auto [q, n] : {std::pair<u64, u64>{3, 82}, {3, 730}, {5, 126}, {5, 42}, {7, 50}, {2, 33}, {3, 365}, {4, 65}}) {
        const CosetContext ctx(q, n);
        std::vector<int> hits(n, 0);
        for (u64 s = 0; s < n; ++s) {
            if (!is_leader_bruteforce(ctx, s)) continue;
            const Coset c = coset_of(ctx, s, true);
            CHECK(ctx.ord() % c.size == 0);
            CHECK(c.size == c.elements.size());
            CHECK(c.leader == *std::min_element(c.elements.begin(), c.elements.end()));
            for (u64 x : c.elements) ++hits[x];
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        CHECK(oracle::all_cosets(q, n).size() ==
              static_cast<std::size_t>(std::count_if(hits.begin(), hits.end(), [&, i = u64{0}](int) mutable {
                  return is_leader_bruteforce(ctx, i++);
              })));
    }
}

TEST_CASE("fast leader test examples") {
    CHECK(is_leader_fast(3, 4, BigUint(41)));
    CHECK_FALSE(is_leader_fast(3, 4, BigUint(40)));
    CHECK(find_leader_witness(3, 4, BigUint(40)).has_value());
    CHECK_THROWS_AS(is_leader_fast(4, 3, BigUint(1)), InvalidInput);
    CHECK_THROWS_AS(is_leader_fast(3, 1, BigUint(1)), InvalidInput);
}

TEST_CASE("fast leader test equals brute force for q^m+1 <= 10^6") {
    for (u64 q : {3, 5, 7, 9, 11, 13}) {
        for (unsigned m = 2;; ++m) {
            const BigUint nb = big_pow(q, m) + 1;
            if (nb > 1'000'000) break;
            const u64 n = nb.convert_to<u64>();
            const CosetContext ctx(q, n);
            std::size_t mismatches = 0;
            for (u64 s = 0; s < n; ++s)
                if (is_leader_fast(q, m, BigUint(s)) != is_leader_bruteforce(ctx, s)) ++mismatches;
            INFO("q=" << q << " m=" << m);
            CHECK(mismatches == 0);
        }
    }
}

TEST_CASE("candidate quotients find the same witnesses as a full sweep") {
    for (auto [q, m] : {std::pair<u64, unsigned>{3, 4}, {3, 5}, {5, 3}, {7, 3}}) {
        const u64 n = to_u64(big_pow(q, m) + 1);
        for (u64 s = 0; s < n; ++s) {
            const bool a = find_leader_witness(q, m, BigUint(s), WitnessSearch::candidates).has_value();
            const bool b = find_leader_witness(q, m, BigUint(s), WitnessSearch::sweep).has_value();
            CHECK(a == b);
        }
    }
}

TEST_CASE("big-integer witness path") {
    // q^m beyond 2^62 takes the arbitrary precision branch.
    const unsigned m = 41;
    const BigUint half = (big_pow(3, m) + 1) / 2;
    CHECK(is_leader_fast(3, m, half));
    CHECK_FALSE(is_leader_fast(3, m, half - 1));
    CHECK_FALSE(is_leader_fast(3, m, half + 1));
}

TEST_CASE("top leaders") {
    auto leaders = [](u64 q, u64 n, std::size_t count, LeaderMethod method) {
        std::vector<u64> v;
        for (const auto& e : top_leaders(CosetContext(q, n), count, method).entries) v.push_back(e.leader);
        return v;
    };
    CHECK(leaders(3, 82, 4, LeaderMethod::brute) == std::vector<u64>{41, 16, 14, 13});
    CHECK(leaders(3, 82, 4, LeaderMethod::fast) == std::vector<u64>{41, 16, 14, 13});
    CHECK(leaders(3, 6562, 2, LeaderMethod::brute) == std::vector<u64>{3281, 1280});
    CHECK(leaders(3, 730, 1, LeaderMethod::brute) == std::vector<u64>{365});
    CHECK_THROWS_AS(top_leaders(CosetContext(3, 365), 2, LeaderMethod::fast), InvalidInput);
    CHECK_THROWS_AS(top_leaders(CosetContext(3, 82), 0, LeaderMethod::brute), InvalidInput);
    LeaderSearchOptions tiny;
    tiny.max_modulus = 50;
    CHECK_THROWS_AS(top_leaders(CosetContext(3, 82), 1, LeaderMethod::brute, tiny), DeskScaleExceeded);

    for (auto [q, n] : {std::pair<u64, u64>{3, 82}, {3, 365}, {5, 42}, {5, 63}, {5, 126}, {7, 43}, {2, 33}, {3, 28}}) {
        const auto want = oracle::top_leaders(q, n, 6);
        const auto got = top_leaders(CosetContext(q, n), 6, LeaderMethod::brute).entries;
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].leader == want[i].first);
            CHECK(got[i].size == want[i].second);
            CHECK(is_leader_bruteforce(CosetContext(q, n), got[i].leader));
        }
    }
}

TEST_CASE("no leader above n/2 for n = q^m+1") {
    for (auto [q, m] : {std::pair<u64, unsigned>{3, 4}, {5, 3}, {7, 3}}) {
        const u64 n = to_u64(big_pow(q, m) + 1);
        const CosetContext ctx(q, n);
        for (u64 s = n / 2 + 1; s < n; ++s) CHECK_FALSE(is_leader_bruteforce(ctx, s));
    }
}

TEST_CASE("lambda lifting preserves leader status and coset size") {
    CHECK_THROWS_AS(lambda_lift(5, 3, 4, 1), InvalidInput);  // 4 does not divide 6
    for (auto [q, m] : {std::pair<u64, unsigned>{5, 3}, {3, 3}, {7, 3}, {3, 5}, {5, 4}, {3, 4}}) {
        const u64 full = to_u64(big_pow(q, m) + 1);
        const u64 g = std::gcd(q + 1, full);
        for (u64 lambda = 2; lambda <= g; ++lambda) {
            if (g % lambda != 0) continue;
            const u64 n = full / lambda;
            for (u64 s = 1; s < n; ++s) {
                const LiftComparison c = lambda_lift(q, m, lambda, s);
                CHECK(c.leader_small == c.leader_big);
                CHECK(c.size_small == c.size_big);
                CHECK(c.leader_small == oracle::is_leader(q, n, s));
            }
        }
    }
    const LiftComparison a = lambda_lift(5, 3, 2, 21);
    CHECK(a.leader_small == a.leader_big);
    CHECK(a.size_small == a.size_big);
    const LiftComparison b = lambda_lift(3, 3, 4, 1);
    CHECK(b.size_small == b.size_big);
}

TEST_CASE("small leaders in [1, q^((m+1)/2)/lambda]") {
    // The size-2 leader (q^2-q+1)/3 for lambda = m = 3, q = 5.
    const auto got = leaders_in_interval(5, 3, 3, 1, 8);
    bool seen7 = false;
    for (const auto& r : got) {
        if (r.leader == 7) {
            seen7 = true;
            CHECK(r.size == 2);
        }
        CHECK(r.leader % 5 != 0);
    }
    CHECK(seen7);
    CHECK_THROWS_AS(leaders_in_interval(5, 3, 3, 1, 25), InvalidInput);
    CHECK_THROWS_AS(leaders_in_interval(5, 4, 2, 1, 5), InvalidInput);
    CHECK_THROWS_AS(leaders_in_interval(5, 3, 6, 1, 5), InvalidInput);

    struct Case {
        u64 q;
        unsigned m;
        u64 lambda;
    };
    for (Case c : {Case{5, 3, 2}, Case{5, 3, 3}, Case{7, 3, 2}, Case{7, 3, 4}, Case{3, 3, 2}, Case{3, 5, 2}, Case{5, 5, 2},
                   Case{5, 5, 3}, Case{11, 3, 2}, Case{11, 3, 3}, Case{11, 3, 4}, Case{11, 3, 6}, Case{17, 3, 3},
                   Case{9, 3, 2}, Case{9, 3, 5}, Case{7, 5, 4}, Case{13, 3, 7}}) {
        const u64 hi = small_leader_bound(c.q, c.m, c.lambda);
        INFO("q=" << c.q << " m=" << c.m << " lambda=" << c.lambda);
        const auto brute = leaders_in_interval(c.q, c.m, c.lambda, 1, hi);
        CHECK(brute == predicted_leaders_in_interval(c.q, c.m, c.lambda, 1, hi));
        const u64 n = to_u64((big_pow(c.q, c.m) + 1) / c.lambda);
        std::vector<LeaderRecord> direct;
        for (u64 s = 1; s <= hi; ++s) {
            const auto o = oracle::orbit(c.q, n, s);
            if (*o.begin() == s) direct.push_back({s, o.size()});
        }
        CHECK(brute == direct);
    }
}

TEST_CASE("leader method names") {
    CHECK(parse_leader_method("brute") == LeaderMethod::brute);
    CHECK(parse_leader_method("fast") == LeaderMethod::fast);
    CHECK(to_string(LeaderMethod::fast) == "fast");
    CHECK_THROWS_AS(parse_leader_method("slow"), InvalidInput);
    CHECK(antiprimitive_exponent(3, 82) == 4u);
    CHECK_FALSE(antiprimitive_exponent(3, 81).has_value());
}
