#include "lcdbch/cosets.hpp"

#include <numeric>
#include <iterator>
#include <map>
#include <string>

#include "lcdbch/error.hpp"

namespace lcdbch {

CosetContext::CosetContext(u64 q, u64 n) : q_(q), n_(n) {
    if (q < 2) throw InvalidInput("coset context: q must be >= 2");
    if (n < 2) throw InvalidInput("coset context: n must be >= 2");
    if (std::gcd(q, n) != 1) throw InvalidInput("coset context: gcd(n, q) must be 1");
    ord_ = ord_mod(q, BigUint(n));
    antipodal_ = (ord_ % 2 == 0) && powmod(q, ord_ / 2, n) == n - 1;
}

Coset coset_of(const CosetContext& ctx, u64 s, bool materialize) {
    if (s >= ctx.n()) throw InvalidInput("coset_of: s must be < n");
    Coset c;
    c.leader = s;
    u64 x = s;
    do {
        if (materialize) c.elements.push_back(x);
        if (x < c.leader) c.leader = x;
        ++c.size;
        x = ctx.next(x);
    } while (x != s);
    return c;
}

bool is_leader_bruteforce(const CosetContext& ctx, u64 s) {
    if (s >= ctx.n()) throw InvalidInput("is_leader_bruteforce: s must be < n");
    for (u64 x = ctx.next(s); x != s; x = ctx.next(x)) {
        if (x < s) return false;
    }
    return true;
}

namespace {

using i128 = __int128;

template <class Int>
std::optional<LeaderWitness> witness_impl(u64 q, unsigned m, const Int& s, WitnessSearch search) {
    std::vector<Int> pw(m + 1);
    pw[0] = 1;
    for (unsigned j = 1; j <= m; ++j) pw[j] = pw[j - 1] * static_cast<Int>(q);

    for (unsigned i = 1; i < m; ++i) {
        const Int& big = pw[m - i];
        const Int& small = pw[i];
        const Int lmax = (small - 1) / 2;
        auto test = [&](const Int& l) -> std::optional<LeaderWitness> {
            if (l < 1 || l > lmax) return std::nullopt;
            const Int h = s - l * big;
            if (h * (small + 1) > -(l * (big - 1)) && h * (small - 1) < l * (big + 1))
                return LeaderWitness{i, BigUint(l), BigUint(h)};
            return std::nullopt;
        };
        if (search == WitnessSearch::candidates) {
            const Int l0 = s / big;
            if (auto w = test(l0)) return w;
            if (auto w = test(l0 + 1)) return w;
        } else {
            for (Int l = 1; l <= lmax; l = l + 1) {
                if (auto w = test(l)) return w;
            }
        }
    }
    return std::nullopt;
}

void check_fast_domain(u64 q, unsigned m) {
    if (q % 2 == 0) throw InvalidInput("fast leader test requires odd q");
    if (m < 2) throw InvalidInput("fast leader test requires m >= 2");
}

}  // namespace

std::optional<LeaderWitness> find_leader_witness(u64 q, unsigned m, const BigUint& s, WitnessSearch search) {
    check_fast_domain(q, m);
    const BigUint qm = big_pow(q, m);
    if (s < 0 || s > qm) throw InvalidInput("leader witness: s must lie in [0, q^m]");
    if (qm < (BigUint(1) << 62)) return witness_impl<i128>(q, m, static_cast<i128>(s.convert_to<long long>()), search);
    return witness_impl<BigUint>(q, m, s, search);
}

bool is_leader_fast(u64 q, unsigned m, const BigUint& s, WitnessSearch search) {
    check_fast_domain(q, m);
    const BigUint n = big_pow(q, m) + 1;
    if (s < 0 || s >= n) throw InvalidInput("is_leader_fast: s must lie in [0, q^m]");
    if (2 * s > n) return false;
    return !find_leader_witness(q, m, s, search).has_value();
}

std::string_view to_string(LeaderMethod method) { return method == LeaderMethod::brute ? "brute" : "fast"; }

LeaderMethod parse_leader_method(std::string_view text) {
    if (text == "brute") return LeaderMethod::brute;
    if (text == "fast") return LeaderMethod::fast;
    throw InvalidInput("unknown leader method '" + std::string(text) + "'");
}

std::optional<unsigned> antiprimitive_exponent(u64 q, u64 n) {
    BigUint qm = q;
    for (unsigned m = 1; qm + 1 <= n; ++m, qm *= q) {
        if (qm + 1 == n) return m;
    }
    return std::nullopt;
}

namespace {

LeaderTable top_leaders_brute(const CosetContext& ctx, std::size_t count, const LeaderSearchOptions& options) {
    const u64 n = ctx.n();
    if (n > options.max_modulus)
        throw DeskScaleExceeded("brute-force leader scan: n = " + std::to_string(n) + " exceeds cap " +
                                std::to_string(options.max_modulus));
    std::vector<std::uint64_t> visited((n + 63) / 64, 0);
    auto seen = [&](u64 x) { return (visited[x >> 6] >> (x & 63)) & 1u; };
    auto mark = [&](u64 x) { visited[x >> 6] |= std::uint64_t{1} << (x & 63); };

    // Leaders found so far, keyed by value. Scanning downward, the first
    // element met in an orbit is its maximum, so once position s is
    // processed every leader >= s is known.
    std::map<u64, u64> leaders;  // leader -> coset size
    const u64 start = ctx.antipodal() ? n / 2 : n - 1;
    for (u64 s = start + 1; s-- > 0;) {
        if (!seen(s)) {
            u64 lo = s;
            u64 size = 0;
            u64 x = s;
            do {
                mark(x);
                if (x < lo) lo = x;
                ++size;
                x = ctx.next(x);
            } while (x != s);
            leaders.emplace(lo, size);
        }
        if (leaders.size() >= count) {
            auto it = leaders.rbegin();
            std::advance(it, static_cast<std::ptrdiff_t>(count - 1));
            if (it->first >= s) break;
        }
    }

    LeaderTable table{ctx, LeaderMethod::brute, {}};
    for (auto it = leaders.rbegin(); it != leaders.rend() && table.entries.size() < count; ++it)
        table.entries.push_back({it->first, it->second});
    return table;
}

LeaderTable top_leaders_fast(const CosetContext& ctx, std::size_t count) {
    const auto m = antiprimitive_exponent(ctx.q(), ctx.n());
    if (!m || ctx.q() % 2 == 0 || *m < 2)
        throw InvalidInput("fast leader method needs n = q^m + 1 with q odd and m >= 2; use --method brute");
    LeaderTable table{ctx, LeaderMethod::fast, {}};
    for (u64 s = ctx.n() / 2 + 1; s-- > 0 && table.entries.size() < count;) {
        if (is_leader_fast(ctx.q(), *m, BigUint(s))) table.entries.push_back({s, coset_of(ctx, s).size});
    }
    return table;
}

}  // namespace

LeaderTable top_leaders(const CosetContext& ctx, std::size_t count, LeaderMethod method,
                        const LeaderSearchOptions& options) {
    if (count == 0) throw InvalidInput("top_leaders: count must be >= 1");
    return method == LeaderMethod::brute ? top_leaders_brute(ctx, count, options) : top_leaders_fast(ctx, count);
}

namespace {

void check_lambda(u64 q, const BigUint& full, u64 lambda) {
    if (lambda == 0 || (q + 1) % lambda != 0) throw InvalidInput("lambda must divide q + 1");
    if (full % lambda != 0) throw InvalidInput("lambda must divide q^m + 1");
}

}  // namespace

LiftComparison lambda_lift(const CosetContext& small, const CosetContext& big, u64 lambda, u64 s) {
    if (s == 0 || s >= small.n()) throw InvalidInput("lambda_lift: s must lie in [1, n-1]");
    if (big.n() != small.n() * lambda) throw InvalidInput("lambda_lift: big modulus must be lambda * n");
    LiftComparison out;
    out.leader_small = is_leader_bruteforce(small, s);
    out.leader_big = is_leader_bruteforce(big, lambda * s);
    out.size_small = coset_of(small, s).size;
    out.size_big = coset_of(big, lambda * s).size;
    return out;
}

LiftComparison lambda_lift(u64 q, unsigned m, u64 lambda, u64 s) {
    const BigUint full = big_pow(q, m) + 1;
    check_lambda(q, full, lambda);
    const u64 big_n = to_u64(full);
    return lambda_lift(CosetContext(q, big_n / lambda), CosetContext(q, big_n), lambda, s);
}

u64 small_leader_bound(u64 q, unsigned m, u64 lambda) {
    return to_u64(big_pow(q, (m + 1) / 2) / lambda);
}

namespace {

void check_interval_regime(u64 q, unsigned m, u64 lambda, u64 lo, u64 hi) {
    if (m < 3 || m % 2 == 0) throw InvalidInput("small-leader interval requires odd m >= 3");
    if (lambda <= 1 || lambda >= q + 1 || (q + 1) % lambda != 0)
        throw InvalidInput("small-leader interval requires 1 < lambda < q+1 with lambda | q+1");
    if (lo < 1 || lo > hi || hi > small_leader_bound(q, m, lambda))
        throw InvalidInput("small-leader interval must satisfy 1 <= lo <= hi <= q^((m+1)/2)/lambda");
}

}  // namespace

std::vector<LeaderRecord> leaders_in_interval(u64 q, unsigned m, u64 lambda, u64 lo, u64 hi) {
    check_interval_regime(q, m, lambda, lo, hi);
    const CosetContext ctx(q, to_u64((big_pow(q, m) + 1) / lambda));
    std::vector<LeaderRecord> out;
    for (u64 s = lo; s <= hi; ++s) {
        if (is_leader_bruteforce(ctx, s)) out.push_back({s, coset_of(ctx, s).size});
    }
    return out;
}

std::vector<LeaderRecord> predicted_leaders_in_interval(u64 q, unsigned m, u64 lambda, u64 lo, u64 hi) {
    check_interval_regime(q, m, lambda, lo, hi);
    const BigUint top = big_pow(q, (m + 1) / 2);
    u64 excluded_hi = 0;
    u64 excluded_lo = 0;
    if (m % 4 == 1) {
        excluded_hi = to_u64((top + 1) / lambda) - 1;
        excluded_lo = to_u64((top + 1) / lambda) - q / lambda;
    } else {
        excluded_hi = to_u64((top - 1) / lambda);
        excluded_lo = excluded_hi - (q - 2) / lambda;
    }
    const bool special_case = (lambda == 3 && m == 3 && q > 3 && q % 3 == 2);
    const u64 special = special_case ? (q * q - q + 1) / 3 : 0;

    std::vector<LeaderRecord> out;
    for (u64 s = lo; s <= hi; ++s) {
        if (s % q == 0) continue;
        if (special_case && s == special) {
            out.push_back({s, 2});
            continue;
        }
        if (s >= excluded_lo && s <= excluded_hi) continue;
        out.push_back({s, 2 * u64{m}});
    }
    return out;
}

}  // namespace lcdbch
