#include "lcdbch/verify.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>

#include "lcdbch/bch_dims.hpp"
#include "lcdbch/codec.hpp"
#include "lcdbch/cosets.hpp"
#include "lcdbch/error.hpp"
#include "lcdbch/leaders.hpp"

namespace lcdbch {

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const CheckLine& l) { return !l.passed; }));
}

namespace {

std::string code_name(u64 q, const BigUint& n, const BigUint& delta) {
    return "C(" + std::to_string(q) + "," + to_string(n) + "," + to_string(delta) + ",0)";
}

template <class F>
void guarded(VerifyReport& rep, const std::string& name, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        rep.lines.push_back({name, false, std::string("exception: ") + e.what()});
    }
}

struct ExampleCode {
    u64 q;
    unsigned m;
    u64 lambda;
    u64 delta;  // literal designed distance
    u64 k;
    const char* note;
};

constexpr ExampleCode kExamples[] = {
    {3, 12, 1, 103697, 9, ""},
    {3, 12, 1, 103665, 33, ""},
    {3, 4, 1, 15, 17, ""},
    {3, 4, 1, 17, 9, ""},
    {3, 8, 1, 1281, 17, ""},
    {3, 8, 1, 1277, 33, ""},
    {5, 3, 3, 8, 11, ""},
    {5, 3, 3, 9, 9, ""},
    {5, 4, 2, 11, 248, ""},
    {5, 3, 2, 21, 2, ""},
    {5, 3, 2, 20, 8, ""},
    {3, 6, 2, 72, 16, "printed with q=5, but 365 = (3^6+1)/2; run with q=3"},
    {3, 6, 2, 66, 28, "printed with q=5, but 365 = (3^6+1)/2; run with q=3"},
};

}  // namespace

VerifyReport verify_examples() {
    VerifyReport rep{"examples", {}};
    for (const ExampleCode& ex : kExamples) {
        BchSpec spec{ex.q, ex.m, ex.lambda, BigUint(ex.delta), 0};
        const std::string name = code_name(ex.q, spec.n(), spec.delta);
        guarded(rep, name, [&] {
            const BigUint exact = dimension_exact(spec);
            const ClosedFormDimension closed = dimension_closed_form(spec);
            std::ostringstream d;
            d << "expected k=" << ex.k << " exact k=" << exact << " closed k=" << closed.k << " ("
              << to_string(closed.provenance) << ") d>=" << distance_lower_bound(spec);
            if (*ex.note) d << "; " << ex.note;
            rep.lines.push_back({name, exact == ex.k && closed.k == ex.k, d.str()});
        });
    }
    return rep;
}

VerifyReport verify_conjecture(const ConjectureGrid& grid) {
    VerifyReport rep{"conjecture", {}};
    for (u64 q : grid.qs) {
        for (unsigned m : grid.ms) {
            const std::string name = "q=" + std::to_string(q) + " m=" + std::to_string(m);
            guarded(rep, name, [&] {
                if (m % 2 != 0) throw InvalidInput("the conjecture grid takes even m");
                ConjectureValues c;
                try {
                    c = conjecture_delta34(q, m);
                } catch (const Uncovered& e) {
                    rep.lines.push_back({name, true, std::string("skipped: ") + e.what()});
                    return;
                }
                const u64 n = to_u64(big_pow(q, m) + 1);
                LeaderSearchOptions opts;
                opts.max_modulus = grid.max_modulus;
                const LeaderTable t = top_leaders(CosetContext(q, n), 4, LeaderMethod::brute, opts);
                const BigUint expect[4] = {delta1(q, m), c.delta2, c.delta3, c.delta4};
                bool ok = t.entries.size() == 4;
                std::ostringstream d;
                d << "brute";
                for (const auto& e : t.entries) d << ' ' << e.leader;
                d << " | formula";
                for (const auto& v : expect) d << ' ' << v;
                for (std::size_t i = 0; ok && i < 4; ++i) ok = (BigUint(t.entries[i].leader) == expect[i]);
                d << " (" << to_string(c.provenance) << ")";
                if (!ok) d << " COUNTEREXAMPLE";
                rep.lines.push_back({name, ok, d.str()});
            });
        }
    }
    return rep;
}

VerifyReport verify_props(u64 seed) {
    VerifyReport rep{"props", {}};
    std::mt19937_64 rng(seed);

    guarded(rep, "gcd identities, 1000 random cases each", [&] {
        std::uniform_int_distribution<u64> bd(2, 20), ud(1, 12);
        for (int i = 0; i < 1000; ++i) {
            gcd_plus_minus(bd(rng), ud(rng), ud(rng));
            gcd_plus_plus(bd(rng), ud(rng), ud(rng));
        }
        rep.lines.push_back({"gcd identities, 1000 random cases each", true, "case split equals direct gcd"});
    });

    guarded(rep, "Psi recursion", [&] {
        bool ok = true;
        for (u64 q : {3, 5, 7, 9})
            for (int x = 1; x <= 4; ++x) ok &= psi(q, x) == psi(q, x - 1) * (big_pow(q, u64{1} << x) - 1);
        rep.lines.push_back({"Psi recursion", ok, "q in {3,5,7,9}, x <= 4"});
    });

    guarded(rep, "Ord(q^m+1) = 2m", [&] {
        bool ok = true;
        for (u64 q : {3, 5, 7, 9, 11})
            for (unsigned m = 1; m <= 10; ++m) ok &= ord_mod(q, big_pow(q, m) + 1) == 2 * u64{m};
        rep.lines.push_back({"Ord(q^m+1) = 2m", ok, "odd q <= 11, m <= 10"});
    });

    guarded(rep, "fast leader test equals brute force", [&] {
        bool ok = true;
        for (auto [q, m] : {std::pair<u64, unsigned>{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
            const u64 n = to_u64(big_pow(q, m) + 1);
            const CosetContext ctx(q, n);
            for (u64 s = 0; s < n; ++s) ok &= is_leader_fast(q, m, BigUint(s)) == is_leader_bruteforce(ctx, s);
        }
        rep.lines.push_back({"fast leader test equals brute force", ok, "every s <= q^m"});
    });

    guarded(rep, "closed-form dimensions equal exact", [&] {
        std::size_t checked = 0;
        bool ok = true;
        for (auto [q, m, lambda] : {std::tuple<u64, unsigned, u64>{3, 4, 1}, {5, 4, 1}, {5, 3, 2}, {5, 3, 3},
                                    {3, 6, 2}, {5, 4, 2}, {7, 3, 2}, {7, 3, 4}}) {
            for (const RangeRow& row : range_table(q, m, lambda)) {
                for (BigUint d = row.delta_lo; d <= row.delta_hi && d <= row.delta_lo + 3; ++d) {
                    const BchSpec spec = BchSpec::from_theorem_delta(q, m, lambda, d);
                    ok &= dimension_exact(spec) == row.k;
                    ++checked;
                }
            }
        }
        rep.lines.push_back({"closed-form dimensions equal exact", ok, std::to_string(checked) + " codes"});
    });

    guarded(rep, "constructed codes are LCD with g*h = x^n-1", [&] {
        bool ok = true;
        for (auto [q, m, lambda, delta] : {std::tuple<u64, unsigned, u64, u64>{3, 4, 1, 15}, {3, 4, 1, 17},
                                           {5, 3, 3, 8}, {5, 3, 2, 20}, {3, 3, 2, 4}}) {
            const BchSpec spec{q, m, lambda, BigUint(delta), 0};
            const CyclicCode code = generator_poly(spec);
            check_polynomial(code);
            ok &= is_lcd(code) && BigUint(code.k) == dimension_exact(spec);
        }
        rep.lines.push_back({"constructed codes are LCD with g*h = x^n-1", ok, "5 codes"});
    });
    return rep;
}

}  // namespace lcdbch
