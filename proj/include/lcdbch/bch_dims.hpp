#pragma once

// Dimensions of BCH codes C_(q,n,delta,b) with n = (q^m+1)/lambda.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdbch/cosets.hpp"
#include "lcdbch/leaders.hpp"
#include "lcdbch/modmath.hpp"

namespace lcdbch {

/// A code C_(q,n,delta,b): the generator is lcm(m_b, ..., m_{b+delta-2}),
/// so delta is the literal designed distance. The dimension theorems index
/// codes as C_(q,n,D+1,0); theorem_delta() returns that D = delta - 1.
struct BchSpec {
    u64 q = 3;
    unsigned m = 2;
    u64 lambda = 1;
    BigUint delta = 2;
    u64 b = 0;

    static BchSpec from_theorem_delta(u64 q, unsigned m, u64 lambda, const BigUint& theorem_delta, u64 b = 0);

    BigUint n() const;
    BigUint theorem_delta() const { return delta - 1; }
    /// Throws InvalidInput unless q is a prime power, lambda | q+1,
    /// lambda | q^m+1, gcd(n, q) = 1 and 2 <= delta <= n.
    void validate() const;
};

struct CodeParams {
    BigUint n;
    BigUint k;
    BigUint d_lower;
    std::optional<u64> d_exact;
};

/// Union of the cosets of b, ..., b+delta-2 modulo n as a bitset.
class DefiningSet {
public:
    DefiningSet(u64 n, std::vector<std::uint64_t> bits, u64 cardinality)
        : n_(n), bits_(std::move(bits)), cardinality_(cardinality) {}

    u64 n() const { return n_; }
    u64 cardinality() const { return cardinality_; }
    bool contains(u64 i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
    std::vector<u64> indices() const;

private:
    u64 n_;
    std::vector<std::uint64_t> bits_;
    u64 cardinality_;
};

/// Bitset budget for defining sets (in bits, i.e. the largest n).
inline constexpr u64 kDefaultDefiningSetCap = u64{1} << 32;

DefiningSet defining_set(const CosetContext& ctx, const BigUint& delta, u64 b);
DefiningSet defining_set(const BchSpec& spec, u64 max_n = kDefaultDefiningSetCap);

/// n - |T|. Throws DeskScaleExceeded when n exceeds max_n.
BigUint dimension_exact(const BchSpec& spec, u64 max_n = kDefaultDefiningSetCap);

struct ClosedFormDimension {
    BigUint k;
    Provenance provenance = Provenance::proven;
    std::string theorem;  // short label of the dimension theorem used
};

/// Dimension from the theorem covering (q, m, lambda, D) with b = 0.
/// Throws Uncovered outside every theorem's hypotheses.
ClosedFormDimension dimension_closed_form(const BchSpec& spec);

/// 2(delta-1) for b = 0 and lambda | q+1, otherwise the BCH bound delta.
BigUint distance_lower_bound(const BchSpec& spec);

/// One row of a piecewise dimension table. The interval is in the theorem
/// convention: the codes are C_(q,n,D+1,0) for delta_lo <= D <= delta_hi.
struct RangeRow {
    BigUint delta_lo;
    BigUint delta_hi;
    BigUint k;
    Provenance provenance = Provenance::proven;
    std::string theorem;
};

/// Every row the dimension theorems give for (q, m, lambda), sorted by
/// decreasing delta. Throws Uncovered if no theorem applies.
std::vector<RangeRow> range_table(u64 q, unsigned m, u64 lambda);

}  // namespace lcdbch
