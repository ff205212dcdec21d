#pragma once

// Slow, direct reference computations used only by the tests. Nothing here
// calls into the library's coset, order or dimension code.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using u64 = std::uint64_t;
using Big = boost::multiprecision::cpp_int;

inline Big ipow(u64 b, u64 e) {
    Big r = 1;
    for (u64 i = 0; i < e; ++i) r *= b;
    return r;
}

inline Big euclid(Big a, Big b) {
    while (b != 0) {
        Big r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Smallest t >= 1 with q^t = 1 mod n, by successive multiplication.
inline u64 order(u64 q, u64 n) {
    u64 x = q % n;
    for (u64 t = 1;; ++t) {
        if (x == 1 % n) return t;
        x = static_cast<u64>(static_cast<unsigned __int128>(x) * q % n);
    }
}

/// The orbit {s q^j mod n} as a sorted set.
inline std::set<u64> orbit(u64 q, u64 n, u64 s) {
    std::set<u64> out;
    u64 x = s % n;
    while (out.insert(x).second) x = static_cast<u64>(static_cast<unsigned __int128>(x) * q % n);
    return out;
}

inline bool is_leader(u64 q, u64 n, u64 s) { return *orbit(q, n, s).begin() == s; }

/// (leader, size) of the `count` largest leaders, by checking every s.
inline std::vector<std::pair<u64, u64>> top_leaders(u64 q, u64 n, std::size_t count) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 s = n; s-- > 0 && out.size() < count;) {
        const auto o = orbit(q, n, s);
        if (*o.begin() == s) out.emplace_back(s, o.size());
    }
    return out;
}

/// n - |union of the orbits of b .. b+delta-2|.
inline u64 dimension(u64 q, u64 n, u64 delta, u64 b) {
    std::set<u64> t;
    for (u64 i = 0; i + 1 < delta; ++i) {
        const u64 s = (b + i) % n;
        if (t.count(s)) continue;
        const auto o = orbit(q, n, s);
        t.insert(o.begin(), o.end());
    }
    return n - t.size();
}

/// Every coset of Z_n, each as a sorted set.
inline std::vector<std::set<u64>> all_cosets(u64 q, u64 n) {
    std::vector<bool> seen(n, false);
    std::vector<std::set<u64>> out;
    for (u64 s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto o = orbit(q, n, s);
        for (u64 x : o) seen[x] = true;
        out.push_back(std::move(o));
    }
    return out;
}

/// Minimum Hamming weight of a q-ary linear code (q prime) given by
/// generator rows, by plain enumeration of all q^k messages.
inline u64 min_weight_prime(u64 q, const std::vector<std::vector<u64>>& rows) {
    const std::size_t k = rows.size();
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<u64> msg(k, 0);
    u64 best = n + 1;
    for (;;) {
        std::size_t i = 0;
        while (i < k && msg[i] == q - 1) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
        u64 w = 0;
        for (std::size_t c = 0; c < n; ++c) {
            u64 v = 0;
            for (std::size_t r = 0; r < k; ++r) v += msg[r] * rows[r][c];
            w += (v % q != 0);
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace oracle
