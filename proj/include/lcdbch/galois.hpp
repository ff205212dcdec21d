#pragma once

// Finite fields GF(p^E) with elements packed as base-p integers.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lcdbch/modmath.hpp"

namespace lcdbch {

/// Largest field order accepted for construction.
inline constexpr u64 kDefaultFieldOrderCap = u64{1} << 32;
/// Fields up to this order get log/antilog tables.
inline constexpr u64 kLogTableCap = u64{1} << 20;
inline constexpr u64 kDefaultFieldSeed = 0x9e3779b97f4a7c15ULL;

/// GF(p^E) = GF(p)[x]/(f). An element is the integer sum c_i p^i of its
/// coefficient vector, so 0 and 1 are the field's zero and one and the
/// prime field sits at 0..p-1.
class Field {
public:
    using Elem = u64;

    /// Finds a monic irreducible modulus of the given degree by seeded random
    /// search, then a primitive element. Throws DeskScaleExceeded above cap.
    Field(u64 p, unsigned degree, u64 seed = kDefaultFieldSeed, u64 order_cap = kDefaultFieldOrderCap);

    /// Uses the given monic modulus (ascending coefficients, leading 1);
    /// throws InvalidInput unless it is irreducible.
    Field(u64 p, std::vector<u64> modulus, u64 order_cap = kDefaultFieldOrderCap);

    u64 p() const { return p_; }
    unsigned degree() const { return degree_; }
    u64 order() const { return order_; }
    const std::vector<u64>& modulus() const { return modulus_; }
    Elem primitive() const { return primitive_; }
    bool has_tables() const { return !exp_.empty(); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, u64 e) const;

    std::vector<u64> digits(Elem a) const;
    Elem from_digits(const std::vector<u64>& d) const;

    /// Multiplicative order of a nonzero element.
    u64 element_order(Elem a) const;

private:
    void finish(u64 order_cap);
    Elem mul_schoolbook(Elem a, Elem b) const;

    u64 p_;
    unsigned degree_;
    u64 order_ = 0;
    std::vector<u64> modulus_;  // ascending, monic, size degree+1
    Elem primitive_ = 0;
    std::vector<u64> pw_;       // p^i for i < degree
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Monic irreducibility over GF(p) by Rabin's test.
bool is_irreducible(u64 p, const std::vector<u64>& monic);

/// A subfield GF(p^e) of GF(p^E) (e | E) with explicit element maps. The
/// small field keeps its own representation; `embed` sends it into the
/// big field and `project` inverts that on the image.
class Subfield {
public:
    Subfield(const Field& small, const Field& big);

    Field::Elem embed(Field::Elem small_elem) const { return embed_[small_elem]; }
    /// Small-field element equal to big_elem; false if big_elem is outside the subfield.
    bool project(Field::Elem big_elem, Field::Elem& out) const;

private:
    std::vector<Field::Elem> embed_;
    std::unordered_map<Field::Elem, Field::Elem> project_;
};

}  // namespace lcdbch
