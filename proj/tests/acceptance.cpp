// One PASS/FAIL line per acceptance criterion. Exit status 1 when any
// gating criterion fails; the stretch distance line never gates.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "lcdbch/bch_dims.hpp"
#include "lcdbch/codec.hpp"
#include "lcdbch/cosets.hpp"
#include "lcdbch/error.hpp"
#include "lcdbch/leaders.hpp"
#include "lcdbch/verify.hpp"
#include "oracles.hpp"

using namespace lcdbch;

namespace {

int failures = 0;

void criterion(const std::string& label, bool gating, const std::function<std::string(bool&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s%s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", label.c_str(), gating ? "" : " [non-gating]",
                detail.c_str(), s);
    std::fflush(stdout);
    if (!ok && gating) ++failures;
}

std::string summarize(const VerifyReport& rep, bool& ok) {
    ok = rep.passed();
    std::ostringstream d;
    d << rep.lines.size() - rep.failures() << "/" << rep.lines.size() << " checks";
    for (const CheckLine& l : rep.lines)
        if (!l.passed) d << "; FAIL " << l.name << " " << l.detail;
    return d.str();
}

}  // namespace

int main() {
    criterion("example code dimensions", true, [](bool& ok) { return summarize(verify_examples(), ok); });

    criterion("example code minimum distances", true, [](bool& ok) {
        std::ostringstream d;
        auto exact = [&](u64 q, unsigned m, u64 lambda, u64 delta) {
            const CyclicCode c = generator_poly(BchSpec{q, m, lambda, BigUint(delta), 0});
            const DistanceResult r = min_distance_exhaustive(c);
            d << "C(" << q << "," << c.n << "," << delta << ",0) d=" << r.weight << (r.exact ? "" : "?") << "; ";
            return r;
        };
        const DistanceResult a = exact(3, 4, 1, 17);
        const DistanceResult b = exact(5, 3, 3, 9);
        const DistanceResult c = exact(5, 3, 3, 8);
        const DistanceResult e = exact(5, 3, 2, 20);
        ok = a.exact && a.weight == 44 && b.exact && b.weight == 22 && c.exact && c.weight == 14 && e.exact &&
             e.weight >= 38;
        return d.str();
    });

    criterion("extended distance of C(3,82,15,0)", false, [](bool& ok) {
        const CyclicCode c = generator_poly(BchSpec{3, 4, 1, 15, 0});
        const DistanceResult r = min_distance_exhaustive(c, kExtendedDistanceBudget);
        ok = r.exact && r.weight == 28;
        return "d=" + std::to_string(r.weight) + (r.exact ? " exact" : " upper bound") + ", " +
               std::to_string(r.messages) + " messages";
    });

    criterion("closed-form leaders equal brute force", true, [](bool& ok) {
        std::size_t checked = 0;
        std::ostringstream d;
        for (auto [q, m] : {std::pair<u64, unsigned>{3, 2}, {3, 4}, {5, 4}, {7, 4}, {3, 6}, {5, 6}, {3, 8}, {3, 12}}) {
            for (u64 lambda : {u64{1}, u64{2}}) {
                const DeltaSet ds = delta_lambda(q, m, lambda);
                const u64 n = to_u64(ds.n);
                const LeaderTable t = top_leaders(CosetContext(q, n), ds.entries.size(), LeaderMethod::brute);
                for (std::size_t r = 0; r < ds.entries.size(); ++r) {
                    ++checked;
                    const bool same = r < t.entries.size() && ds.entries[r].value == t.entries[r].leader &&
                                      (!ds.entries[r].coset_size || *ds.entries[r].coset_size == t.entries[r].size);
                    if (!same) {
                        ok = false;
                        d << "mismatch q=" << q << " m=" << m << " lambda=" << lambda << " rank " << r + 1 << "; ";
                    }
                }
            }
        }
        d << checked << " leaders";
        return d.str();
    });

    criterion("third and fourth leader conjecture, q in {3,5}, even m <= 12", true, [](bool& ok) {
        ConjectureGrid g;
        g.qs = {3, 5};
        g.ms = {2, 4, 6, 8, 10, 12};
        return summarize(verify_conjecture(g), ok);
    });

    criterion("fast leader test equals brute force", true, [](bool& ok) {
        std::size_t checked = 0;
        for (auto [q, m] : {std::pair<u64, unsigned>{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
            const u64 n = to_u64(big_pow(q, m) + 1);
            const CosetContext ctx(q, n);
            for (u64 s = 0; s < n; ++s, ++checked)
                if (is_leader_fast(q, m, BigUint(s)) != is_leader_bruteforce(ctx, s)) ok = false;
        }
        return std::to_string(checked) + " residues";
    });

    criterion("leaders lift from (q^m+1)/lambda to q^m+1", true, [](bool& ok) {
        std::size_t checked = 0;
        for (auto [q, m] : {std::pair<u64, unsigned>{5, 3}, {3, 3}, {7, 3}, {3, 5}}) {
            const u64 full = to_u64(big_pow(q, m) + 1);
            const u64 g = std::gcd(q + 1, full);
            for (u64 lambda = 2; lambda <= g; ++lambda) {
                if (g % lambda != 0) continue;
                const CosetContext small(q, full / lambda), big(q, full);
                for (u64 s = 1; s < full / lambda; ++s, ++checked) {
                    const LiftComparison c = lambda_lift(small, big, lambda, s);
                    if (c.leader_small != c.leader_big || c.size_small != c.size_big) ok = false;
                }
            }
        }
        return std::to_string(checked) + " residues";
    });

    criterion("desk-scale example codes are LCD", true, [](bool& ok) {
        std::ostringstream d;
        for (auto [q, m, lambda, delta] : {std::tuple<u64, unsigned, u64, u64>{3, 4, 1, 15}, {3, 4, 1, 17},
                                           {3, 8, 1, 1281}, {3, 8, 1, 1277}, {5, 3, 3, 8}, {5, 3, 3, 9},
                                           {5, 4, 2, 11}, {5, 3, 2, 21}, {5, 3, 2, 20}, {3, 6, 2, 72}, {3, 6, 2, 66}}) {
            const BchSpec spec{q, m, lambda, BigUint(delta), 0};
            const CyclicCode c = generator_poly(spec);
            check_polynomial(c);
            const bool lcd = is_lcd(c);
            ok = ok && lcd;
            d << "C(" << q << "," << c.n << "," << delta << ",0)" << (lcd ? "" : " NOT LCD") << "; ";
        }
        d << "C(3,531442,*,0) is beyond the field cap";
        return d.str();
    });

    criterion("gcd case splits, 1000 random cases each", true, [](bool& ok) {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<u64> bd(2, 20), ud(1, 12);
        for (int i = 0; i < 1000; ++i) {
            u64 b = bd(rng), u = ud(rng), v = ud(rng);
            ok &= gcd_plus_minus(b, u, v) == oracle::euclid(oracle::ipow(b, u) + 1, oracle::ipow(b, v) - 1);
            b = bd(rng), u = ud(rng), v = ud(rng);
            ok &= gcd_plus_plus(b, u, v) == oracle::euclid(oracle::ipow(b, u) + 1, oracle::ipow(b, v) + 1);
        }
        return std::string("2000 identities");
    });

    criterion("small-delta dimension formulas, q = 5", true, [](bool& ok) {
        std::size_t covered = 0;
        std::ostringstream d;
        for (auto [m, lambda] : {std::pair<unsigned, u64>{3, 2}, {3, 3}, {4, 2}}) {
            const u64 n = to_u64((big_pow(5, m) + 1) / lambda);
            for (u64 D = 2; D + 1 <= n; ++D) {
                const BchSpec s = BchSpec::from_theorem_delta(5, m, lambda, D);
                ClosedFormDimension c;
                try {
                    c = dimension_closed_form(s);
                } catch (const Uncovered&) {
                    continue;
                }
                ++covered;
                const u64 want = oracle::dimension(5, n, D + 1, 0);
                if (c.k != want) {
                    ok = false;
                    d << "m=" << m << " lambda=" << lambda << " D=" << D << " closed " << c.k << " oracle " << want
                      << "; ";
                }
            }
        }
        d << covered << " codes";
        return d.str();
    });

    std::printf("%s\n", failures == 0 ? "ALL GATING CRITERIA PASS" : "GATING FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
