#pragma once

// Closed forms for the largest coset leaders modulo (q^m+1)/lambda, q odd.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcdbch/modmath.hpp"

namespace lcdbch {

enum class Provenance { proven, conjectural, brute_force };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);
/// conjectural dominates proven; brute_force is only combined with itself.
Provenance combine(Provenance a, Provenance b);

enum class Regime {
    m4,                // lambda = 1, m = 4
    m8,                // lambda = 1, m = 8
    m_4mod8_ge12,      // lambda = 1, m = 4 (mod 8), m >= 12
    m_pow2_ge16,       // lambda = 1, m = 2^k, k >= 4
    m_8mod16_ge24,     // lambda = 1, m = 8 (mod 16), m >= 24
    m_2nu_general,     // lambda = 1, other even m (m = 2 included)
    m_odd,             // lambda = 1, odd m >= 3
    lambda2_even,      // lambda = 2, even m
    lambda2_odd_q1mod4,// lambda = 2, odd m >= 3, q = 1 (mod 4)
    uncovered,
};

std::string_view to_string(Regime r);

/// Exactly one tag per (q, m, lambda); `uncovered` when no result applies.
Regime classify(u64 q, unsigned m, u64 lambda);

struct DeltaEntry {
    BigUint value;
    std::optional<u64> coset_size;  // nullopt when no result states it
    Provenance provenance = Provenance::proven;
    std::string source;  // short label of the formula used
};

/// delta_1, delta_2, ... of the modulus (q^m+1)/lambda, as far as known.
struct DeltaSet {
    u64 q = 0;
    unsigned m = 0;
    u64 lambda = 1;
    BigUint n;
    Regime regime = Regime::uncovered;
    std::vector<DeltaEntry> entries;  // entries[r-1] is delta_r

    Provenance provenance() const;
    const DeltaEntry& at(std::size_t rank) const;  // 1-based
};

BigUint delta1(u64 q, unsigned m);

/// Second largest leader modulo q^m + 1, m even: Psi_q(k-1) when m = 2^k
/// (k >= 2), else n/(q^(2^nu)+1) * Psi_q(nu-1) with nu = nu2(m).
BigUint delta2_even(u64 q, unsigned m);

struct DeltaPair {
    BigUint third;
    BigUint fourth;
};

/// m = 4: ((q-1)^2(q^2-1)/2 - (q-1), (q-1)^2(q^2-1)/2 - q).
DeltaPair delta34_m4(u64 q);
/// m = 8: D - (q-1)^2 and D - (q^3 - q^2), D = (q-1)^2(q^2-1)(q^4-1)/2.
DeltaPair delta34_m8(u64 q);
/// m = 4 (mod 8), m >= 12.
DeltaPair delta34_4mod8(u64 q, unsigned m);

/// Third and fourth leaders from the open conjecture for even m, with the
/// corrected fourth-leader branch for m = 3 * 2^nu. Provenance is proven
/// exactly for m = 4, 8 and m = 4 (mod 8), m >= 12. For m = 8 (mod 16),
/// m >= 24, the expanded base-q form of delta_3 is evaluated independently
/// and must agree (ConsistencyError otherwise).
struct ConjectureValues {
    BigUint delta2;
    BigUint delta3;
    BigUint delta4;
    Provenance provenance = Provenance::conjectural;
    std::optional<BigUint> expansion_delta3;  // present for m = 8 (mod 16), m >= 24
};

ConjectureValues conjecture_delta34(u64 q, unsigned m);

/// The delta_3 expansion used for m = 8 (mod 16), m >= 24, as a sum of signed powers of q.
BigUint expanded_delta3_8mod16(u64 q, unsigned m);

/// n/2 - q^(m-1) + q^(m-3) - ... - q^(m-11) + sum_{j=1}^{(m-12)/8} Phi(j), m = 4 (mod 8), m >= 12.
BigUint expanded_delta3_4mod8(u64 q, unsigned m);

/// Known largest leaders for (q, m, lambda). lambda = 1 covers every even m
/// (delta_3/delta_4 flagged conjectural outside the proven cases) and odd
/// m >= 3; lambda = 2 covers even m and odd m with q = 1 (mod 4).
/// Anything else throws Uncovered.
DeltaSet delta_lambda(u64 q, unsigned m, u64 lambda);

/// Proven coset size of delta_rank; nullopt when the size is not known.
/// Throws Uncovered when the regime or rank has no closed form.
std::optional<u64> coset_size_of_top(u64 q, unsigned m, u64 lambda, std::size_t rank);

}  // namespace lcdbch
