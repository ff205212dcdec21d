// lcdbch: cosets, leaders, dimensions and codes for LCD BCH codes of
// length (q^m+1)/lambda. JSON on stdout, diagnostics on stderr.
//
// Exit codes: 0 ok, 1 failed assertion, 2 invalid input, 3 desk scale exceeded.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcdbch/bch_dims.hpp"
#include "lcdbch/codec.hpp"
#include "lcdbch/cosets.hpp"
#include "lcdbch/error.hpp"
#include "lcdbch/leaders.hpp"
#include "lcdbch/records.hpp"
#include "lcdbch/verify.hpp"

using namespace lcdbch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDeskScale = 3;

struct Common {
    u64 q = 3;
    unsigned m = 4;
    u64 lambda = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--q", c.q, "Field size (odd prime power for closed forms)")->required();
    cmd->add_option("--m", c.m, "Exponent m in n = (q^m+1)/lambda")->required();
    cmd->add_option("--lambda", c.lambda, "Divisor of q+1 and q^m+1")->capture_default_str();
}

struct DeltaInput {
    std::string delta;
    u64 b = 0;
    bool theorem_delta = false;
    bool code_param = false;
};

void add_delta(CLI::App* cmd, DeltaInput& d) {
    cmd->add_option("--delta", d.delta, "Designed distance of C_(q,n,delta,b)")->required();
    cmd->add_option("--b", d.b, "Starting exponent")->capture_default_str();
    auto* t = cmd->add_flag("--theorem-delta", d.theorem_delta,
                            "Read --delta as D for the code C_(q,n,D+1,0) of the dimension theorems");
    auto* c = cmd->add_flag("--delta-is-code-param", d.code_param,
                            "Read --delta as the code's own designed distance (the default)");
    t->excludes(c);
}

BchSpec make_spec(const Common& c, const DeltaInput& d) {
    const BigUint raw = parse_big(d.delta);
    BchSpec spec = d.theorem_delta ? BchSpec::from_theorem_delta(c.q, c.m, c.lambda, raw, d.b)
                                   : BchSpec{c.q, c.m, c.lambda, raw, d.b};
    spec.validate();
    return spec;
}

BigUint modulus(const Common& c) {
    if (c.lambda == 0) throw InvalidInput("lambda must be >= 1");
    const BigUint full = big_pow(c.q, c.m) + 1;
    if (full % c.lambda != 0) throw InvalidInput("lambda must divide q^m + 1");
    return full / c.lambda;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

ResultRecord base_record(const BchSpec& spec) {
    ResultRecord r;
    r.q = spec.q;
    r.m = spec.m;
    r.lambda = spec.lambda;
    r.n = spec.n();
    r.b = spec.b;
    r.delta = spec.delta;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclotomic cosets, coset leaders and LCD BCH code dimensions for n = (q^m+1)/lambda"};
    app.require_subcommand(1);

    // coset
    Common coset_c;
    u64 coset_s = 0;
    std::optional<u64> coset_n;
    bool coset_elements = false;
    auto* coset = app.add_subcommand("coset", "The q-cyclotomic coset of s");
    coset->add_option("--q", coset_c.q, "Field size")->required();
    coset->add_option("--m", coset_c.m, "Exponent m (n = (q^m+1)/lambda)");
    coset->add_option("--lambda", coset_c.lambda, "Divisor of q^m+1")->capture_default_str();
    coset->add_option("--n", coset_n, "Explicit modulus instead of (q^m+1)/lambda");
    coset->add_option("--s", coset_s, "Representative")->required();
    coset->add_flag("--elements", coset_elements, "List the coset elements");

    // leaders
    Common lead_c;
    std::size_t lead_count = 4;
    std::string lead_method = "brute";
    std::string cache_dir;
    bool no_cache = false;
    u64 max_modulus = LeaderSearchOptions{}.max_modulus;
    auto* leaders = app.add_subcommand("leaders", "The largest coset leaders modulo (q^m+1)/lambda");
    add_common(leaders, lead_c);
    leaders->add_option("--count", lead_count, "Number of leaders")->capture_default_str();
    leaders->add_option("--method", lead_method, "brute | fast")->capture_default_str();
    leaders->add_option("--cache-dir", cache_dir, "Leader cache directory (default $LCDBCH_CACHE_DIR)");
    leaders->add_flag("--no-cache", no_cache, "Ignore the leader cache");
    leaders->add_option("--max-modulus", max_modulus, "Largest n for the brute-force scan")->capture_default_str();

    // deltas
    Common deltas_c;
    auto* deltas = app.add_subcommand("deltas", "Closed-form largest coset leaders with provenance");
    add_common(deltas, deltas_c);

    // dim
    Common dim_c;
    DeltaInput dim_d;
    std::string dim_mode = "exact";
    auto* dim = app.add_subcommand("dim", "Dimension of C_(q,n,delta,b)");
    add_common(dim, dim_c);
    add_delta(dim, dim_d);
    dim->add_option("--mode", dim_mode, "exact | closed | both")->capture_default_str();

    // range
    Common range_c;
    auto* range = app.add_subcommand("range", "Piecewise dimension table from the dimension theorems");
    add_common(range, range_c);

    // code
    Common code_c;
    DeltaInput code_d;
    u64 budget = kDefaultDistanceBudget;
    bool extended = false;
    bool no_distance = false;
    unsigned threads = 0;
    u64 field_cap = kDefaultFieldOrderCap;
    u64 sample_trials = 0;
    auto* code = app.add_subcommand("code", "Construct the code: generator, LCD flag and distance");
    add_common(code, code_c);
    add_delta(code, code_d);
    code->add_option("--budget", budget, "Exhaustive distance budget in messages")->capture_default_str();
    code->add_flag("--extended", extended, "Use the extended distance budget");
    code->add_flag("--no-distance", no_distance, "Skip the distance search");
    code->add_option("--threads", threads, "Distance search threads (0: hardware)")->capture_default_str();
    code->add_option("--field-cap", field_cap, "Largest extension field order")->capture_default_str();
    code->add_option("--sample", sample_trials, "Random-message trials when the exhaustive search is skipped");

    // verify
    std::string suite = "examples";
    std::vector<u64> ver_q{3};
    std::vector<unsigned> ver_m;
    unsigned ver_m_max = 12;
    auto* verify = app.add_subcommand("verify", "Run a self-check suite");
    verify->add_option("--suite", suite, "examples | conjecture | props")->capture_default_str();
    verify->add_option("--q", ver_q, "Field sizes for the conjecture grid");
    verify->add_option("--m", ver_m, "Even exponents for the conjecture grid");
    verify->add_option("--m-max", ver_m_max, "Largest even m when --m is not given")->capture_default_str();
    verify->add_option("--max-modulus", max_modulus, "Largest n for the brute-force scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*coset) {
            const u64 n = coset_n ? *coset_n : to_u64(modulus(coset_c));
            const CosetContext ctx(coset_c.q, n);
            const Coset c = coset_of(ctx, coset_s, coset_elements);
            Json j;
            j["q"] = coset_c.q;
            j["n"] = n;
            j["s"] = coset_s;
            j["leader"] = c.leader;
            j["size"] = c.size;
            j["is_leader"] = c.leader == coset_s;
            j["ord"] = ctx.ord();
            if (coset_elements) j["elements"] = c.elements;
            emit(j);
            return kExitOk;
        }

        if (*leaders) {
            const LeaderMethod method = parse_leader_method(lead_method);
            const BigUint nbig = modulus(lead_c);
            if (nbig > std::numeric_limits<u64>::max())
                throw DeskScaleExceeded("modulus " + to_string(nbig) + " exceeds 64 bits");
            const u64 n = nbig.convert_to<u64>();
            std::optional<LeaderCache> cache;
            if (!no_cache) {
                if (!cache_dir.empty())
                    cache.emplace(cache_dir);
                else if (auto dir = LeaderCache::env_dir())
                    cache.emplace(*dir);
            }
            LeaderReport rep{lead_c.q, lead_c.m, lead_c.lambda, nbig, method, {}};
            std::optional<std::vector<LeaderRecord>> hit;
            if (cache) hit = cache->lookup(lead_c.q, lead_c.m, lead_c.lambda, method, lead_count);
            if (hit) {
                rep.leaders = *hit;
                std::cerr << "leaders: cache hit " << cache->file() << '\n';
            } else {
                LeaderSearchOptions opts;
                opts.max_modulus = max_modulus;
                rep.leaders = top_leaders(CosetContext(lead_c.q, n), lead_count, method, opts).entries;
                if (cache) cache->store(lead_c.q, lead_c.m, lead_c.lambda, method, rep.leaders);
            }
            emit(to_json(rep));
            return kExitOk;
        }

        if (*deltas) {
            const DeltaSet ds = delta_lambda(deltas_c.q, deltas_c.m, deltas_c.lambda);
            Json j;
            j["q"] = ds.q;
            j["m"] = ds.m;
            j["lambda"] = ds.lambda;
            j["n"] = big_to_json(ds.n);
            j["regime"] = std::string(to_string(ds.regime));
            j["provenance"] = std::string(to_string(ds.provenance()));
            Json rows = Json::array();
            for (std::size_t i = 0; i < ds.entries.size(); ++i) {
                const DeltaEntry& e = ds.entries[i];
                rows.push_back({{"rank", i + 1},
                                {"value", big_to_json(e.value)},
                                {"coset_size", e.coset_size ? Json(*e.coset_size) : Json(nullptr)},
                                {"provenance", std::string(to_string(e.provenance))},
                                {"source", e.source}});
            }
            j["deltas"] = std::move(rows);
            if (ds.lambda == 1 && ds.m % 2 == 0 && ds.m >= 4) {
                const ConjectureValues c = conjecture_delta34(ds.q, ds.m);
                if (c.expansion_delta3) j["expansion_delta3"] = big_to_json(*c.expansion_delta3);
            }
            emit(j);
            return kExitOk;
        }

        if (*dim) {
            const BchSpec spec = make_spec(dim_c, dim_d);
            if (dim_mode != "exact" && dim_mode != "closed" && dim_mode != "both")
                throw InvalidInput("--mode must be exact, closed or both");
            ResultRecord r = base_record(spec);
            r.method = dim_mode;
            r.d_lower = distance_lower_bound(spec);
            std::optional<BigUint> exact;
            std::optional<ClosedFormDimension> closed;
            if (dim_mode != "closed") exact = dimension_exact(spec);
            if (dim_mode != "exact") closed = dimension_closed_form(spec);
            r.k = exact ? *exact : closed->k;
            if (closed) r.provenance = closed->provenance;
            r.elapsed_ms = ms_since(t0);
            Json j = to_json(r);
            if (closed) j["theorem"] = closed->theorem;
            if (exact && closed && *exact != closed->k) {
                j["k_closed"] = big_to_json(closed->k);
                emit(j);
                std::cerr << "dim: exact k = " << *exact << " differs from closed form k = " << closed->k << '\n';
                return kExitAssert;
            }
            emit(j);
            return kExitOk;
        }

        if (*range) {
            const std::vector<RangeRow> rows = range_table(range_c.q, range_c.m, range_c.lambda);
            Json j;
            j["q"] = range_c.q;
            j["m"] = range_c.m;
            j["lambda"] = range_c.lambda;
            j["n"] = big_to_json(modulus(range_c));
            Json out = Json::array();
            for (const RangeRow& row : rows) {
                out.push_back({{"delta_lo", big_to_json(row.delta_lo)},
                               {"delta_hi", big_to_json(row.delta_hi)},
                               {"code_delta_lo", big_to_json(row.delta_lo + 1)},
                               {"code_delta_hi", big_to_json(row.delta_hi + 1)},
                               {"k", big_to_json(row.k)},
                               {"provenance", std::string(to_string(row.provenance))},
                               {"source", row.theorem}});
            }
            j["rows"] = std::move(out);
            emit(j);
            return kExitOk;
        }

        if (*code) {
            const BchSpec spec = make_spec(code_c, code_d);
            ResultRecord r = base_record(spec);
            r.d_lower = distance_lower_bound(spec);
            r.method = "construct";
            try {
                const CyclicCode cc = generator_poly(spec, field_cap);
                check_polynomial(cc);
                r.k = BigUint(cc.k);
                r.lcd = is_lcd(cc);
                Json extra;
                if (!no_distance) {
                    const DistanceResult d = min_distance_exhaustive(cc, extended ? kExtendedDistanceBudget : budget, threads);
                    if (d.exact) {
                        r.d_exact = d.weight;
                        r.method = "construct+exhaustive";
                    } else {
                        extra["d_upper"] = d.weight;
                        extra["notice"] = "distance budget exhausted after " + std::to_string(d.messages) +
                                          " messages; d_upper is an upper bound";
                        r.method = "construct+partial";
                    }
                } else if (sample_trials > 0) {
                    extra["d_upper"] = min_distance_sample(cc, sample_trials);
                    r.method = "construct+sample";
                }
                r.elapsed_ms = ms_since(t0);
                Json j = to_json(r);
                for (auto& [key, value] : extra.items()) j[key] = value;
                j["generator"] = cc.generator.coeffs;
                emit(j);
                return kExitOk;
            } catch (const DeskScaleExceeded& e) {
                r.k = dimension_exact(spec);
                try {
                    r.provenance = dimension_closed_form(spec).provenance;
                } catch (const Uncovered&) {
                }
                r.method = "params-only";
                r.elapsed_ms = ms_since(t0);
                Json j = to_json(r);
                j["notice"] = std::string("field construction skipped: ") + e.what();
                emit(j);
                std::cerr << "code: " << e.what() << '\n';
                return kExitDeskScale;
            }
        }

        if (*verify) {
            VerifyReport rep;
            if (suite == "examples") {
                rep = verify_examples();
            } else if (suite == "conjecture") {
                ConjectureGrid grid;
                grid.qs = ver_q;
                grid.max_modulus = max_modulus == LeaderSearchOptions{}.max_modulus ? grid.max_modulus : max_modulus;
                if (!ver_m.empty()) {
                    grid.ms = ver_m;
                } else {
                    grid.ms.clear();
                    for (unsigned m = 2; m <= ver_m_max; m += 2) grid.ms.push_back(m);
                }
                rep = verify_conjecture(grid);
            } else if (suite == "props") {
                rep = verify_props();
            } else {
                throw InvalidInput("--suite must be examples, conjecture or props");
            }
            Json j;
            j["suite"] = rep.suite;
            j["passed"] = rep.passed();
            j["checks"] = rep.lines.size();
            j["failures"] = rep.failures();
            Json lines = Json::array();
            for (const CheckLine& l : rep.lines) {
                lines.push_back({{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
                std::cerr << (l.passed ? "PASS " : "FAIL ") << l.name << ": " << l.detail << '\n';
            }
            j["lines"] = std::move(lines);
            emit(j);
            return rep.passed() ? kExitOk : kExitAssert;
        }
    } catch (const DeskScaleExceeded& e) {
        std::cerr << "desk scale exceeded: " << e.what() << '\n';
        return kExitDeskScale;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Uncovered& e) {
        std::cerr << "uncovered: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ConsistencyError& e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return kExitAssert;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAssert;
    }
    return kExitOk;
}
