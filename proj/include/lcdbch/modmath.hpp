#pragma once

// Exact integer number theory shared by the coset, closed-form and code modules.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcdbch {

// Arbitrary precision integer. Public operations treat it as non-negative
// unless documented otherwise (leader witnesses can be negative).
using BigUint = boost::multiprecision::cpp_int;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint big_pow(u64 base, u64 exponent);
BigUint big_pow(const BigUint& base, u64 exponent);

// Throws InvalidInput if the value does not fit in 64 bits or is negative.
u64 to_u64(const BigUint& v);

std::string to_string(const BigUint& v);
BigUint parse_big(const std::string& text);

inline u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }
u64 powmod(u64 base, u64 exponent, u64 n);

/// 2-adic valuation: the largest l with 2^l | b. Rejects b = 0.
unsigned nu2(u64 b);
unsigned nu2(const BigUint& b);

struct EvenDecomposition {
    bool power_of_two;
    unsigned nu;  // nu2(m)
};

/// Every even m is a power of two or satisfies m = 2^nu (mod 2^(nu+1)).
EvenDecomposition even_decompose(u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Prime factors of n (distinct, ascending) by trial division.
std::vector<u64> prime_factors(u64 n);

class PrimePower {
public:
    /// Factors q = p^e; throws InvalidInput unless q is a prime power.
    explicit PrimePower(u64 q);
    PrimePower(u64 p, unsigned e);

    u64 p() const { return p_; }
    unsigned e() const { return e_; }
    u64 q() const { return q_; }
    bool odd() const { return p_ != 2; }

private:
    u64 p_;
    unsigned e_;
    u64 q_;
};

inline constexpr u64 kDefaultOrderStepCap = u64{1} << 28;

/// Multiplicative order of q modulo n. When n divides q^m + 1 for some
/// m (every modulus (q^m+1)/lambda with lambda | q+1) the order is found
/// among the divisors of 2m; otherwise powers are stepped up to step_cap.
u64 ord_mod(u64 q, const BigUint& n, u64 step_cap = kDefaultOrderStepCap);

/// gcd(b^u + 1, b^v - 1) by the classical case split, cross-checked
/// against a direct gcd. Throws ConsistencyError if they ever differ.
BigUint gcd_plus_minus(u64 b, u64 u, u64 v);

/// gcd(b^u + 1, b^v + 1), same dual-route contract.
BigUint gcd_plus_plus(u64 b, u64 u, u64 v);

/// Least non-negative residue of a modulo b (b >= 1).
BigUint remainder(const BigUint& a, const BigUint& b);

/// Psi_q(x) = (q-1)/2 * prod_{j=0..x} (q^(2^j) - 1) for x >= 0, (q-1)/2 for x < 0.
BigUint psi(u64 q, int x);

/// Phi(j) = q^8j - q^(8j-1) + q^(8j-3) - q^(8j-4) + q^(8j-5) - q^(8j-7), j >= 1.
BigUint phi_term(u64 q, u64 j);

}  // namespace lcdbch
