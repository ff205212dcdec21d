#pragma once

// q-cyclotomic cosets modulo n.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lcdbch/modmath.hpp"

namespace lcdbch {

/// The ring Z_n acted on by multiplication by q; gcd(n, q) = 1.
class CosetContext {
public:
    CosetContext(u64 q, u64 n);

    u64 q() const { return q_; }
    u64 n() const { return n_; }
    /// Ord_n(q); every coset size divides it.
    u64 ord() const { return ord_; }
    /// True when -1 is a power of q mod n, so s and n-s share a coset and
    /// every leader is at most n/2.
    bool antipodal() const { return antipodal_; }

    u64 next(u64 s) const { return mulmod(s, q_, n_); }

private:
    u64 q_;
    u64 n_;
    u64 ord_;
    bool antipodal_;
};

struct Coset {
    u64 leader = 0;
    u64 size = 0;
    std::vector<u64> elements;  // empty unless materialized
};

Coset coset_of(const CosetContext& ctx, u64 s, bool materialize = false);

/// s equals the minimum of its orbit. 0 is the leader of {0}.
bool is_leader_bruteforce(const CosetContext& ctx, u64 s);

/// Witness (i, l, h) showing s = l*q^(m-i) + h is not a coset leader
/// modulo q^m + 1: 1 <= l <= (q^i-1)/2 and
/// -l(q^(m-i)-1)/(q^i+1) < h < l(q^(m-i)+1)/(q^i-1).
struct LeaderWitness {
    unsigned i = 0;
    BigUint l;
    BigUint h;  // may be negative
};

enum class WitnessSearch {
    candidates,  // only l = floor(s/q^(m-i)) and that plus one
    sweep,       // every admissible l; exponential, cross-validation only
};

std::optional<LeaderWitness> find_leader_witness(u64 q, unsigned m, const BigUint& s,
                                                 WitnessSearch search = WitnessSearch::candidates);

/// Leader test for n = q^m + 1, q odd, 0 <= s <= q^m, in O(m) big-integer steps.
bool is_leader_fast(u64 q, unsigned m, const BigUint& s, WitnessSearch search = WitnessSearch::candidates);

struct LeaderRecord {
    u64 leader = 0;
    u64 size = 0;
    friend bool operator==(const LeaderRecord&, const LeaderRecord&) = default;
};

enum class LeaderMethod { brute, fast };

std::string_view to_string(LeaderMethod method);
LeaderMethod parse_leader_method(std::string_view text);

/// Ranked leaders: entries[0] is rank 1, the largest leader.
struct LeaderTable {
    CosetContext context;
    LeaderMethod method;
    std::vector<LeaderRecord> entries;
};

struct LeaderSearchOptions {
    // Modulus cap for the visited bitset of the brute-force scan.
    u64 max_modulus = 100'000'000;
};

/// The `count` largest coset leaders with their coset sizes, descending.
/// The fast method requires n = q^m + 1 with q odd.
LeaderTable top_leaders(const CosetContext& ctx, std::size_t count, LeaderMethod method,
                        const LeaderSearchOptions& options = {});

/// Exponent m with q^m + 1 == n, if any.
std::optional<unsigned> antiprimitive_exponent(u64 q, u64 n);

struct LiftComparison {
    bool leader_small = false;  // s modulo n
    bool leader_big = false;    // lambda*s modulo lambda*n
    u64 size_small = 0;
    u64 size_big = 0;
};

/// Leader status and coset size of s mod n = (q^m+1)/lambda and of
/// lambda*s mod q^m+1, each evaluated independently.
LiftComparison lambda_lift(u64 q, unsigned m, u64 lambda, u64 s);
LiftComparison lambda_lift(const CosetContext& small, const CosetContext& big, u64 lambda, u64 s);

/// Coset leaders in [lo, hi] modulo (q^m+1)/lambda by orbit computation.
/// Requires odd m >= 3, 1 < lambda < q+1, lambda | q+1, 1 <= lo <= hi <= q^((m+1)/2)/lambda.
std::vector<LeaderRecord> leaders_in_interval(u64 q, unsigned m, u64 lambda, u64 lo, u64 hi);

/// The same interval predicted from the small-leader description: every
/// s not divisible by q is a leader of size 2m, except one run just below
/// q^((m+1)/2)/lambda, and the size-2 leader (q^2-q+1)/3 when lambda = m = 3,
/// q > 3, q = 2 mod 3.
std::vector<LeaderRecord> predicted_leaders_in_interval(u64 q, unsigned m, u64 lambda, u64 lo, u64 hi);

/// Upper end q^((m+1)/2)/lambda (floored) of the small-leader interval.
u64 small_leader_bound(u64 q, unsigned m, u64 lambda);

}  // namespace lcdbch
