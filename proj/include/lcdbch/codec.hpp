#pragma once

// Cyclic code construction over GF(q): minimal polynomials of beta^i,
// BCH generator polynomials, the LCD test, encoding and distance search.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lcdbch/bch_dims.hpp"
#include "lcdbch/cosets.hpp"
#include "lcdbch/galois.hpp"

namespace lcdbch {

/// Polynomial over GF(q), ascending coefficients given as elements of the
/// base field. The zero polynomial is empty; otherwise the last entry is nonzero.
struct FieldPoly {
    std::vector<Field::Elem> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    std::size_t degree() const;  // throws on the zero polynomial
    friend bool operator==(const FieldPoly&, const FieldPoly&) = default;
};

/// GF(q) together with its extension GF(q^t), t = Ord_n(q), and an element
/// beta of multiplicative order exactly n.
struct Extension {
    u64 q = 0;
    u64 n = 0;
    unsigned t = 0;
    Field base;
    Field big;
    Subfield sub;
    Field::Elem alpha = 0;  // primitive element of the big field
    Field::Elem beta = 0;   // alpha^((q^t - 1)/n)
    CosetContext cosets;
};

/// Throws DeskScaleExceeded when q^t exceeds order_cap.
std::shared_ptr<const Extension> build_extension(u64 q, u64 n, u64 order_cap = kDefaultFieldOrderCap);

/// prod_{j in C_i} (x - beta^j) with coefficients mapped back to GF(q).
/// Throws ConsistencyError if a coefficient falls outside GF(q).
FieldPoly minimal_poly(const Extension& ext, u64 i);

// Polynomial arithmetic over the base field of an extension.
FieldPoly poly_mul(const Field& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_add(const Field& f, const FieldPoly& a, const FieldPoly& b);
/// Quotient and remainder of a by a nonzero b.
std::pair<FieldPoly, FieldPoly> poly_divmod(const Field& f, const FieldPoly& a, const FieldPoly& b);
/// x^n - 1 over f.
FieldPoly x_pow_minus_one(const Field& f, u64 n);
/// c(beta^i) in the big field.
Field::Elem evaluate_at_power(const Extension& ext, const FieldPoly& c, u64 i);

struct CyclicCode {
    std::shared_ptr<const Extension> ext;
    u64 n = 0;
    FieldPoly generator;
    u64 k = 0;
    std::vector<u64> defining_set;  // sorted indices of T

    const Field& field() const { return ext->base; }
};

/// Product of minimal polynomials over the distinct cosets meeting
/// {b, ..., b+delta-2}; any length n with gcd(n, q) = 1.
CyclicCode generator_poly(std::shared_ptr<const Extension> ext, const BigUint& delta, u64 b);
CyclicCode generator_poly(const BchSpec& spec, u64 order_cap = kDefaultFieldOrderCap);
/// Code generated by an explicit divisor g of x^n - 1 (checked).
CyclicCode code_from_generator(std::shared_ptr<const Extension> ext, FieldPoly g);

/// h = (x^n - 1)/g; throws ConsistencyError if g does not divide x^n - 1.
FieldPoly check_polynomial(const CyclicCode& code);

/// g0^{-1} x^deg(g) g(1/x); throws InvalidInput when g(0) = 0.
FieldPoly reciprocal(const Field& f, const FieldPoly& g);
/// The generator is self-reciprocal.
bool is_lcd(const CyclicCode& code);

/// Codeword m(x) g(x) as a length-n vector; message has k symbols.
std::vector<Field::Elem> encode(const CyclicCode& code, const std::vector<Field::Elem>& message);

/// Weight of a codeword vector.
u64 hamming_weight(const std::vector<Field::Elem>& word);

inline constexpr u64 kDefaultDistanceBudget = 50'000'000;
inline constexpr u64 kExtendedDistanceBudget = 200'000'000;

struct DistanceResult {
    u64 weight = 0;        // exact minimum, or the best upper bound found
    bool exact = false;    // false: budget ran out, weight is an upper bound
    u64 messages = 0;      // normalized messages enumerated
};

/// Minimum weight over all nonzero codewords. Messages whose leading
/// nonzero symbol is 1 are enumerated in a q-ary Gray order, updating the
/// codeword by one generator row per step. If the (q^k-1)/(q-1) messages
/// exceed the budget, only `budget` are visited and the result is an upper bound.
DistanceResult min_distance_exhaustive(const CyclicCode& code, u64 budget = kDefaultDistanceBudget,
                                       unsigned threads = 0);

/// Minimum weight over `trials` random nonzero messages; an upper bound.
u64 min_distance_sample(const CyclicCode& code, u64 trials, u64 seed = 1);

}  // namespace lcdbch
