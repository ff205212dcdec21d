#include "lcdbch/bch_dims.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lcdbch/error.hpp"

namespace lcdbch {

BchSpec BchSpec::from_theorem_delta(u64 q, unsigned m, u64 lambda, const BigUint& theorem_delta, u64 b) {
    BchSpec s;
    s.q = q;
    s.m = m;
    s.lambda = lambda;
    s.delta = theorem_delta + 1;
    s.b = b;
    return s;
}

BigUint BchSpec::n() const {
    if (lambda == 0) throw InvalidInput("lambda must be >= 1");
    return (big_pow(q, m) + 1) / lambda;
}

void BchSpec::validate() const {
    PrimePower pp(q);
    (void)pp;
    if (m < 1) throw InvalidInput("m must be >= 1");
    if (lambda == 0 || (q + 1) % lambda != 0) throw InvalidInput("lambda must divide q + 1");
    const BigUint full = big_pow(q, m) + 1;
    if (full % lambda != 0) throw InvalidInput("lambda must divide q^m + 1");
    const BigUint len = full / lambda;
    if (len < 2) throw InvalidInput("code length must be >= 2");
    if (boost::multiprecision::gcd(len, BigUint(q)) != 1) throw InvalidInput("gcd(n, q) must be 1");
    if (delta < 2 || delta > len)
        throw InvalidInput("designed distance must satisfy 2 <= delta <= n (n = " + to_string(len) + ")");
}

std::vector<u64> DefiningSet::indices() const {
    std::vector<u64> out;
    out.reserve(cardinality_);
    for (u64 w = 0; w < bits_.size(); ++w) {
        for (std::uint64_t word = bits_[w]; word != 0; word &= word - 1)
            out.push_back(w * 64 + static_cast<u64>(std::countr_zero(word)));
    }
    return out;
}

DefiningSet defining_set(const CosetContext& ctx, const BigUint& delta, u64 b) {
    const u64 n = ctx.n();
    if (delta < 2 || delta > n) throw InvalidInput("designed distance must satisfy 2 <= delta <= n");
    std::vector<std::uint64_t> bits((n + 63) / 64, 0);
    u64 card = 0;
    const u64 span = to_u64(delta - 1);  // indices b, ..., b+delta-2
    for (u64 t = 0; t < span && card < n; ++t) {
        const u64 start = static_cast<u64>((static_cast<u128>(b) + t) % n);
        if ((bits[start >> 6] >> (start & 63)) & 1u) continue;
        u64 x = start;
        do {
            bits[x >> 6] |= std::uint64_t{1} << (x & 63);
            ++card;
            x = ctx.next(x);
        } while (x != start);
    }
    return DefiningSet(n, std::move(bits), card);
}

DefiningSet defining_set(const BchSpec& spec, u64 max_n) {
    spec.validate();
    const BigUint n = spec.n();
    if (n > max_n)
        throw DeskScaleExceeded("defining set: n = " + to_string(n) + " exceeds cap " + std::to_string(max_n));
    return defining_set(CosetContext(spec.q, to_u64(n)), spec.delta, spec.b);
}

BigUint dimension_exact(const BchSpec& spec, u64 max_n) {
    const DefiningSet t = defining_set(spec, max_n);
    return BigUint(t.n() - t.cardinality());
}

BigUint distance_lower_bound(const BchSpec& spec) {
    spec.validate();
    if (spec.b == 0 && (spec.q + 1) % spec.lambda == 0) return 2 * (spec.delta - 1);
    return spec.delta;
}

namespace {

// Large-delta rows: each theorem lists the top leaders and the dimension
// on each interval between consecutive leaders.
std::vector<RangeRow> large_rows(u64 q, unsigned m, u64 lambda) {
    const Regime regime = classify(q, m, lambda);
    std::vector<RangeRow> rows;
    auto add = [&](BigUint lo, BigUint hi, BigUint k, Provenance p, const char* label) {
        rows.push_back(RangeRow{std::move(lo), std::move(hi), std::move(k), p, label});
    };
    const u64 mm = m;

    switch (regime) {
        case Regime::m4:
        case Regime::m8: {
            const DeltaSet ds = delta_lambda(q, m, 1);
            const u64 step = (regime == Regime::m4) ? 8 : 16;
            const char* label = (regime == Regime::m4) ? "m=4 leader table" : "m=8 leader table";
            for (u64 i = 1; i <= 3; ++i)
                add(ds.at(i + 1).value + 1, ds.at(i).value, BigUint(step * i - (step - 1)), Provenance::proven, label);
            add(ds.at(4).value, ds.at(4).value, BigUint(step * 4 - (step - 1)), Provenance::proven, label);
            return rows;
        }
        case Regime::m_4mod8_ge12: {
            const DeltaSet ds = delta_lambda(q, m, 1);
            const char* label = "m=4 mod 8 leader table";
            for (u64 i = 1; i <= 2; ++i)
                add(ds.at(i + 1).value + 1, ds.at(i).value, BigUint(8 * i - 7), Provenance::proven, label);
            add(ds.at(4).value + 1, ds.at(3).value, BigUint(2 * mm + 9), Provenance::proven, label);
            add(ds.at(4).value, ds.at(4).value, BigUint(4 * mm + 9), Provenance::proven, label);
            return rows;
        }
        case Regime::lambda2_odd_q1mod4: {
            const DeltaSet ds = delta_lambda(q, m, 2);
            const char* label = "lambda=2 odd-m leader table";
            add(ds.at(2).value + 1, ds.at(1).value, BigUint(2), Provenance::proven, label);
            add(ds.at(2).value, ds.at(2).value, BigUint(2 + 2 * mm), Provenance::proven, label);
            return rows;
        }
        case Regime::lambda2_even: {
            const auto dec = even_decompose(m);
            if (dec.power_of_two || dec.nu > 2 || m < 3 * (1u << dec.nu)) return rows;
            const DeltaSet ds = delta_lambda(q, m, 2);
            const Provenance p = ds.provenance();
            const u64 base = u64{2} << dec.nu;  // 2^(nu+1)
            const char* label = "lambda=2 even-m leader table";
            for (u64 i = 1; i <= 2; ++i)
                add(ds.at(i + 1).value + 1, ds.at(i).value, BigUint(2 * mm * (i - 1) + base), p, label);
            add(ds.at(3).value, ds.at(3).value, BigUint(4 * mm + base), p, label);
            return rows;
        }
        default: return rows;
    }
}

constexpr u64 kMaxSmallRows = 1'000'000;

struct SmallRegime {
    BigUint bound;  // D - 1 ranges over [1, bound]
    bool odd_m = false;
    bool special = false;  // lambda = m = 3, q > 3, q = 2 mod 3
    BigUint special_s;
    BigUint cut;           // Delta, start of the excluded run (odd m)
};

std::optional<SmallRegime> small_regime(u64 q, unsigned m, u64 lambda) {
    if (q % 2 == 0 || lambda < 2 || (q + 1) % lambda != 0) return std::nullopt;
    SmallRegime r;
    if (m % 2 == 1) {
        if (m < 3 || lambda >= q + 1) return std::nullopt;
        r.odd_m = true;
        const BigUint top = big_pow(q, (m + 1) / 2);
        r.bound = top / lambda;
        if (m % 4 == 1)
            r.cut = (top + 1) / lambda - q / lambda;
        else
            r.cut = (top - 1) / lambda - (q - 2) / lambda;
        r.special = (lambda == 3 && m == 3 && q > 3 && q % 3 == 2);
        if (r.special) r.special_s = BigUint(q * q - q + 1) / 3;
        return r;
    }
    if (lambda != 2 || m < 4) return std::nullopt;
    r.bound = big_pow(q, m / 2) / 2;
    return r;
}

// Dimension for D - 1 in [1, bound]. Every s <= D-1 not divisible by q is
// a leader of size 2m apart from the exceptions tracked by SmallRegime.
ClosedFormDimension small_dimension(u64 q, unsigned m, const BigUint& n, const SmallRegime& r, const BigUint& d) {
    const BigUint two_m = 2 * BigUint(m);
    const BigUint dm1 = d - 1;
    if (r.special) {
        const BigUint& s = r.special_s;
        if (d <= s) return {n - 6 * (dm1 - dm1 / q) - 1, Provenance::proven, "small-delta count, lambda=m=3"};
        return {n - 6 * (s - 1 - dm1 / q) - 3, Provenance::proven, "small-delta count, lambda=m=3"};
    }
    if (!r.odd_m) return {n - two_m * (dm1 - dm1 / q) - 1, Provenance::proven, "lambda=2 small-delta count"};
    if (d <= r.cut) return {n - two_m * (dm1 - dm1 / q) - 1, Provenance::proven, "small-delta count"};
    const BigUint cm1 = r.cut - 1;
    return {n - two_m * (cm1 - cm1 / q) - 1, Provenance::proven, "small-delta count"};
}

}  // namespace

ClosedFormDimension dimension_closed_form(const BchSpec& spec) {
    spec.validate();
    if (spec.b != 0) throw Uncovered("closed-form dimensions require b = 0");
    const BigUint d = spec.theorem_delta();
    const BigUint n = spec.n();

    for (const RangeRow& row : large_rows(spec.q, spec.m, spec.lambda)) {
        if (row.delta_lo <= d && d <= row.delta_hi) return {row.k, row.provenance, row.theorem};
    }
    if (auto r = small_regime(spec.q, spec.m, spec.lambda)) {
        if (d >= 2 && d - 1 <= r->bound) return small_dimension(spec.q, spec.m, n, *r, d);
    }
    throw Uncovered("no dimension theorem covers q=" + std::to_string(spec.q) + " m=" + std::to_string(spec.m) +
                    " lambda=" + std::to_string(spec.lambda) + " with designed distance " + to_string(spec.delta));
}

std::vector<RangeRow> range_table(u64 q, unsigned m, u64 lambda) {
    if (lambda == 0 || (q + 1) % lambda != 0) throw InvalidInput("lambda must divide q + 1");
    if ((big_pow(q, m) + 1) % lambda != 0) throw InvalidInput("lambda must divide q^m + 1");
    std::vector<RangeRow> rows = large_rows(q, m, lambda);
    if (auto r = small_regime(q, m, lambda)) {
        if (r->bound > kMaxSmallRows)
            throw DeskScaleExceeded("small-delta table would have " + to_string(r->bound) + " rows");
        const BigUint n = (big_pow(q, m) + 1) / lambda;
        std::vector<RangeRow> small;
        for (BigUint d = 2; d - 1 <= r->bound; ++d) {
            ClosedFormDimension c = small_dimension(q, m, n, *r, d);
            if (!small.empty() && small.back().k == c.k && small.back().theorem == c.theorem)
                small.back().delta_hi = d;
            else
                small.push_back(RangeRow{d, d, c.k, c.provenance, c.theorem});
        }
        if (!rows.empty() && !small.empty() && rows.back().delta_lo <= small.back().delta_hi)
            throw ConsistencyError("small- and large-delta dimension rows overlap");
        rows.insert(rows.end(), small.rbegin(), small.rend());
    }
    if (rows.empty())
        throw Uncovered("no dimension theorem covers q=" + std::to_string(q) + " m=" + std::to_string(m) +
                        " lambda=" + std::to_string(lambda));
    std::sort(rows.begin(), rows.end(), [](const RangeRow& a, const RangeRow& b) { return a.delta_lo > b.delta_lo; });
    return rows;
}

}  // namespace lcdbch
