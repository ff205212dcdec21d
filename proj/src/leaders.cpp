#include "lcdbch/leaders.hpp"

#include <string>
#include <utility>

#include "lcdbch/error.hpp"

namespace lcdbch {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::proven: return "proven";
        case Provenance::conjectural: return "conjectural";
        case Provenance::brute_force: return "brute-force";
    }
    return "?";
}

Provenance parse_provenance(std::string_view text) {
    if (text == "proven") return Provenance::proven;
    if (text == "conjectural") return Provenance::conjectural;
    if (text == "brute-force") return Provenance::brute_force;
    throw InvalidInput("unknown provenance '" + std::string(text) + "'");
}

Provenance combine(Provenance a, Provenance b) {
    if (a == Provenance::conjectural || b == Provenance::conjectural) return Provenance::conjectural;
    if (a == Provenance::brute_force && b == Provenance::brute_force) return Provenance::brute_force;
    return Provenance::proven;
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::m4: return "m=4";
        case Regime::m8: return "m=8";
        case Regime::m_4mod8_ge12: return "m=4 mod 8, m>=12";
        case Regime::m_pow2_ge16: return "m=2^k, k>=4";
        case Regime::m_8mod16_ge24: return "m=8 mod 16, m>=24";
        case Regime::m_2nu_general: return "m=2^nu mod 2^(nu+1)";
        case Regime::m_odd: return "odd m";
        case Regime::lambda2_even: return "lambda=2, even m";
        case Regime::lambda2_odd_q1mod4: return "lambda=2, odd m, q=1 mod 4";
        case Regime::uncovered: return "uncovered";
    }
    return "?";
}

namespace {

BigUint exact_div(const BigUint& a, const BigUint& b, const char* what) {
    if (b == 0 || a % b != 0)
        throw ConsistencyError(std::string("closed form '") + what + "' left a nonzero remainder");
    return a / b;
}

BigUint pw(u64 q, u64 e) { return big_pow(q, e); }

bool is_pow2(u64 m) { return m != 0 && (m & (m - 1)) == 0; }

void require_odd_q(u64 q) {
    if (q < 3 || q % 2 == 0) throw InvalidInput("closed forms require an odd prime power q");
    PrimePower check(q);
    (void)check;
}

// Conjecture formulas are defined for m = 2^k with k >= 2 and for
// m = 2^nu (mod 2^(nu+1)) with m >= 3 * 2^nu.
bool conjecture_applies(unsigned m) {
    if (m % 2 != 0) return false;
    if (is_pow2(m)) return m >= 4;
    return true;  // any non power of two even m is at least 3 * 2^nu
}

}  // namespace

Regime classify(u64 q, unsigned m, u64 lambda) {
    if (q < 3 || q % 2 == 0 || m < 1) return Regime::uncovered;
    if (lambda == 1) {
        if (m % 2 == 1) return m >= 3 ? Regime::m_odd : Regime::uncovered;
        if (m == 4) return Regime::m4;
        if (m == 8) return Regime::m8;
        if (m % 8 == 4 && m >= 12) return Regime::m_4mod8_ge12;
        if (is_pow2(m) && m >= 16) return Regime::m_pow2_ge16;
        if (m % 16 == 8 && m >= 24) return Regime::m_8mod16_ge24;
        return Regime::m_2nu_general;
    }
    if (lambda == 2) {
        if (m % 2 == 0) return Regime::lambda2_even;
        if (m >= 3 && q % 4 == 1) return Regime::lambda2_odd_q1mod4;
    }
    return Regime::uncovered;
}

Provenance DeltaSet::provenance() const {
    Provenance p = Provenance::proven;
    for (const auto& e : entries) p = combine(p, e.provenance);
    return p;
}

const DeltaEntry& DeltaSet::at(std::size_t rank) const {
    if (rank == 0 || rank > entries.size())
        throw Uncovered("no closed form for delta_" + std::to_string(rank) + " in regime " +
                        std::string(to_string(regime)));
    return entries[rank - 1];
}

BigUint delta1(u64 q, unsigned m) {
    require_odd_q(q);
    if (m < 1) throw InvalidInput("delta1: m must be >= 1");
    return (pw(q, m) + 1) / 2;
}

BigUint delta2_even(u64 q, unsigned m) {
    require_odd_q(q);
    if (m < 2 || m % 2 != 0) throw InvalidInput("delta2_even: m must be even and >= 2");
    const auto dec = even_decompose(m);
    if (dec.power_of_two && m >= 4) return psi(q, static_cast<int>(dec.nu) - 1);
    const BigUint n = pw(q, m) + 1;
    return exact_div(n, pw(q, u64{1} << dec.nu) + 1, "n/(q^(2^nu)+1)") * psi(q, static_cast<int>(dec.nu) - 1);
}

DeltaPair delta34_m4(u64 q) {
    require_odd_q(q);
    const BigUint base = BigUint(q - 1) * (q - 1) * (BigUint(q) * q - 1) / 2;
    return {base - (q - 1), base - q};
}

DeltaPair delta34_m8(u64 q) {
    require_odd_q(q);
    const BigUint base = BigUint(q - 1) * (q - 1) * (BigUint(q) * q - 1) * (pw(q, 4) - 1) / 2;
    return {base - BigUint(q - 1) * (q - 1), base - (pw(q, 3) - pw(q, 2))};
}

DeltaPair delta34_4mod8(u64 q, unsigned m) {
    require_odd_q(q);
    if (m < 12 || m % 8 != 4) throw InvalidInput("delta34_4mod8: requires m >= 12, m = 4 (mod 8)");
    const BigUint c = BigUint(q - 1) * (q - 1) * (BigUint(q) * q - 1);
    const BigUint third = exact_div(c * (pw(q, m) - 2 * pw(q, m - 8) - 1), 2 * (pw(q, 4) + 1), "Delta_3");
    const BigUint step = (m == 12) ? pw(q, 2) * c : (pw(q, 4) - 1) * c;
    return {third, third - step};
}

BigUint expanded_delta3_4mod8(u64 q, unsigned m) {
    require_odd_q(q);
    if (m < 12 || m % 8 != 4) throw InvalidInput("expanded_delta3_4mod8: requires m >= 12, m = 4 (mod 8)");
    BigUint v = (pw(q, m) + 1) / 2;
    v += -pw(q, m - 1) + pw(q, m - 3) - pw(q, m - 4) + pw(q, m - 5) - pw(q, m - 7) + pw(q, m - 9) - pw(q, m - 11);
    for (u64 j = 1; j <= (m - 12) / 8; ++j) v += phi_term(q, j);
    return v;
}

BigUint expanded_delta3_8mod16(u64 q, unsigned m) {
    require_odd_q(q);
    if (m < 24 || m % 16 != 8) throw InvalidInput("expanded_delta3_8mod16: requires m >= 24, m = 8 (mod 16)");
    static constexpr std::pair<int, unsigned> head[] = {{-1, 1},  {1, 3},   {-1, 4},  {1, 5},  {-1, 7},  {1, 9},
                                                        {-1, 11}, {1, 12},  {-1, 13}, {1, 15}, {-1, 16}, {1, 17},
                                                        {-1, 19}, {1, 20},  {-1, 21}, {1, 23}};
    static constexpr std::pair<int, unsigned> block[] = {{-1, 1},  {1, 3},  {-1, 4}, {1, 5},   {-1, 7},
                                                         {1, 9},   {-1, 11}, {1, 12}, {-1, 13}, {1, 15}};
    BigUint v = (pw(q, m) - 1) / 2;
    for (auto [sign, off] : head) v += sign * pw(q, m - off);
    for (u64 j = 1; j <= (m - 24) / 16; ++j) {
        for (auto [sign, off] : block) v += sign * pw(q, 16 * j - off);
    }
    return v;
}

ConjectureValues conjecture_delta34(u64 q, unsigned m) {
    require_odd_q(q);
    if (m % 2 != 0 || m == 0) throw InvalidInput("conjecture_delta34: m must be even");
    if (!conjecture_applies(m)) throw Uncovered("the third/fourth leader conjecture does not cover m = 2");

    const auto dec = even_decompose(m);
    const int nu = static_cast<int>(dec.nu);
    ConjectureValues out;
    out.delta2 = delta2_even(q, m);
    if (dec.power_of_two) {
        out.delta3 = out.delta2 - 2 * psi(q, nu - 3);
        if (m == 4)
            out.delta4 = out.delta3 - 1;
        else
            out.delta4 = out.delta2 - 2 * pw(q, u64{1} << (nu - 2)) * psi(q, nu - 4);
    } else {
        const BigUint shift =
            exact_div(out.delta2 + psi(q, nu), pw(q, u64{1} << (nu + 1)), "(delta2 + Psi(nu)) / q^(2^(nu+1))");
        out.delta3 = out.delta2 - 2 * shift;
        const u64 t = (m - (u64{1} << nu)) >> (nu + 1);  // m = 2^nu + t 2^(nu+1)
        if (t == 1)
            out.delta4 = out.delta3 - 2 * pw(q, u64{1} << (nu - 1)) * psi(q, nu - 1);
        else
            out.delta4 = out.delta3 - 2 * psi(q, nu);
    }

    const Regime r = classify(q, m, 1);
    out.provenance = (r == Regime::m4 || r == Regime::m8 || r == Regime::m_4mod8_ge12) ? Provenance::proven
                                                                                         : Provenance::conjectural;

    if (r == Regime::m_8mod16_ge24) {
        const BigUint product = exact_div(BigUint(q - 1) * (q - 1) * (BigUint(q) * q - 1) * (pw(q, 4) - 1) *
                                              (pw(q, m) - 2 * pw(q, m - 16) - 1),
                                          2 * (pw(q, 8) + 1), "delta_3 product form");
        const BigUint expansion = expanded_delta3_8mod16(q, m);
        if (product != expansion || expansion != out.delta3)
            throw ConsistencyError("delta_3 expansion for m = 8 (mod 16) disagrees with the conjecture value");
        out.expansion_delta3 = expansion;
    }
    return out;
}

namespace {

DeltaEntry entry(BigUint value, std::optional<u64> size, Provenance p, std::string source) {
    return DeltaEntry{std::move(value), size, p, std::move(source)};
}

// Size of the coset of delta_2 mod q^m+1 (equivalently of delta_1 mod (q^m+1)/2).
u64 second_leader_size(unsigned m) {
    const auto dec = even_decompose(m);
    return dec.power_of_two ? 2 * u64{m} : (u64{2} << dec.nu);
}

// delta_3/delta_4 mod q^m + 1 for even m with their provenance and sizes.
struct Lower {
    BigUint third;
    BigUint fourth;
    Provenance provenance;
    std::optional<u64> size;
    std::string source;
};

std::optional<Lower> lower_pair_even(u64 q, unsigned m) {
    const u64 two_m = 2 * u64{m};
    switch (classify(q, m, 1)) {
        case Regime::m4: {
            auto d = delta34_m4(q);
            return Lower{d.third, d.fourth, Provenance::proven, two_m, "m=4 leaders"};
        }
        case Regime::m8: {
            auto d = delta34_m8(q);
            return Lower{d.third, d.fourth, Provenance::proven, two_m, "m=8 leaders"};
        }
        case Regime::m_4mod8_ge12: {
            auto d = delta34_4mod8(q, m);
            return Lower{d.third, d.fourth, Provenance::proven, two_m, "m=4 mod 8 leaders"};
        }
        default: break;
    }
    if (!conjecture_applies(m)) return std::nullopt;
    auto c = conjecture_delta34(q, m);
    const auto dec = even_decompose(m);
    std::optional<u64> size;
    if (dec.power_of_two || dec.nu == 1) size = two_m;
    return Lower{c.delta3, c.delta4, Provenance::conjectural, size, "conjecture"};
}

}  // namespace

DeltaSet delta_lambda(u64 q, unsigned m, u64 lambda) {
    require_odd_q(q);
    DeltaSet ds;
    ds.q = q;
    ds.m = m;
    ds.lambda = lambda;
    ds.regime = classify(q, m, lambda);
    if (lambda == 0 || (q + 1) % lambda != 0) throw InvalidInput("lambda must divide q + 1");
    const BigUint full = pw(q, m) + 1;
    if (full % lambda != 0) throw InvalidInput("lambda must divide q^m + 1");
    ds.n = full / lambda;

    switch (ds.regime) {
        case Regime::uncovered:
            throw Uncovered("no closed-form leaders for q=" + std::to_string(q) + " m=" + std::to_string(m) +
                            " lambda=" + std::to_string(lambda));
        case Regime::m_odd: {
            const BigUint two = exact_div((q - 1) * full, 2 * BigUint(q + 1), "(q-1)n/(2(q+1))");
            const BigUint three =
                exact_div((q - 1) * (pw(q, m) - 2 * pw(q, m - 2) - 1), 2 * BigUint(q + 1), "odd-m delta_3");
            ds.entries.push_back(entry(full / 2, 1, Provenance::proven, "n/2"));
            ds.entries.push_back(entry(two, 2, Provenance::proven, "odd-m delta_2"));
            ds.entries.push_back(entry(three, 2 * u64{m}, Provenance::proven, "odd-m delta_3"));
            return ds;
        }
        case Regime::lambda2_odd_q1mod4: {
            const BigUint one = exact_div((q - 1) * full, 4 * BigUint(q + 1), "(q-1)(q^m+1)/(4(q+1))");
            const BigUint two =
                exact_div((q - 1) * (pw(q, m) - 2 * pw(q, m - 2) - 1), 4 * BigUint(q + 1), "lambda=2 delta_2");
            ds.entries.push_back(entry(one, 2, Provenance::proven, "lambda=2 odd-m delta_1"));
            ds.entries.push_back(entry(two, 2 * u64{m}, Provenance::proven, "lambda=2 odd-m delta_2"));
            return ds;
        }
        case Regime::lambda2_even: {
            const BigUint d2 = delta2_even(q, m);
            ds.entries.push_back(
                entry(exact_div(d2, 2, "delta_2/2"), second_leader_size(m), Provenance::proven, "delta_2/2"));
            const auto dec = even_decompose(m);
            const bool cor3 = !dec.power_of_two && (dec.nu == 1 || dec.nu == 2) && m >= 3 * (1u << dec.nu);
            if (cor3) {
                auto low = lower_pair_even(q, m);
                const Provenance p = low->provenance;
                ds.entries.push_back(entry(exact_div(low->third, 2, "delta_3/2"), 2 * u64{m}, p, "delta_3/2"));
                ds.entries.push_back(entry(exact_div(low->fourth, 2, "delta_4/2"), 2 * u64{m}, p, "delta_4/2"));
            }
            return ds;
        }
        default: break;
    }

    // lambda = 1, even m.
    ds.entries.push_back(entry(full / 2, 1, Provenance::proven, "n/2"));
    ds.entries.push_back(entry(delta2_even(q, m), second_leader_size(m), Provenance::proven, "delta_2"));
    if (auto low = lower_pair_even(q, m)) {
        ds.entries.push_back(entry(low->third, low->size, low->provenance, low->source));
        ds.entries.push_back(entry(low->fourth, low->size, low->provenance, low->source));
    }
    return ds;
}

std::optional<u64> coset_size_of_top(u64 q, unsigned m, u64 lambda, std::size_t rank) {
    return delta_lambda(q, m, lambda).at(rank).coset_size;
}

}  // namespace lcdbch
