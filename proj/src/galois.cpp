#include "lcdbch/galois.hpp"

#include <random>
#include <string>

#include "lcdbch/error.hpp"

namespace lcdbch {

namespace {

// Dense polynomials over the prime field GF(p), ascending coefficients.
using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod_p(u64 a, u64 p) { return powmod(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& m, u64 p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f by repeated p-th powering.
Poly frobenius_power(const Poly& f, u64 p, unsigned k) {
    Poly x = poly_mod({0, 1}, f, p);
    for (unsigned step = 0; step < k; ++step) {
        Poly result{1};
        Poly base = x;
        for (u64 e = p; e != 0; e >>= 1) {
            if (e & 1u) result = poly_mulmod(result, base, f, p);
            if (e > 1) base = poly_mulmod(base, base, f, p);
        }
        x = std::move(result);
    }
    return x;
}

Poly minus_x(Poly a, u64 p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible(u64 p, const std::vector<u64>& monic) {
    if (monic.size() < 2 || monic.back() != 1) throw InvalidInput("is_irreducible: expects a monic polynomial");
    const unsigned d = static_cast<unsigned>(monic.size() - 1);
    if (d == 1) return true;
    if (!minus_x(frobenius_power(monic, p, d), p).empty()) return false;
    for (u64 r : prime_factors(d)) {
        Poly g = poly_gcd(monic, minus_x(frobenius_power(monic, p, d / static_cast<unsigned>(r)), p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

Field::Field(u64 p, unsigned degree, u64 seed, u64 order_cap) : p_(p), degree_(degree) {
    if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
    if (degree == 0) throw InvalidInput("field degree must be >= 1");
    if (big_pow(p, degree) > order_cap)
        throw DeskScaleExceeded("field of order " + std::to_string(p) + "^" + std::to_string(degree) +
                                " exceeds desk-scale cap " + std::to_string(order_cap));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> coef(0, p - 1);
    modulus_.assign(degree + 1, 0);
    modulus_[degree] = 1;
    do {
        for (unsigned i = 0; i < degree; ++i) modulus_[i] = coef(rng);
    } while (modulus_[0] == 0 || !is_irreducible(p, modulus_));
    finish(order_cap);
}

Field::Field(u64 p, std::vector<u64> modulus, u64 order_cap) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
    for (u64 c : modulus_)
        if (c >= p) throw InvalidInput("modulus coefficients must lie in [0, p)");
    if (modulus_.size() < 2 || !is_irreducible(p, modulus_))
        throw InvalidInput("field modulus must be monic irreducible");
    degree_ = static_cast<unsigned>(modulus_.size() - 1);
    if (big_pow(p, degree_) > order_cap) throw DeskScaleExceeded("field order exceeds desk-scale cap");
    finish(order_cap);
}

void Field::finish(u64) {
    order_ = to_u64(big_pow(p_, degree_));
    pw_.resize(degree_);
    pw_[0] = 1;
    for (unsigned i = 1; i < degree_; ++i) pw_[i] = pw_[i - 1] * p_;

    const u64 group = order_ - 1;
    const std::vector<u64> factors = prime_factors(group);
    auto is_primitive = [&](Elem g) {
        if (g == 0) return false;
        for (u64 r : factors)
            if (pow(g, group / r) == 1) return false;
        return true;
    };
    // The residue class of x is tried first, then successive elements.
    Elem candidate = degree_ > 1 ? p_ : 2 % order_;
    if (order_ == 2) candidate = 1;
    while (!is_primitive(candidate)) candidate = (candidate + 1) % order_;
    primitive_ = candidate;

    if (order_ <= kLogTableCap) {
        exp_.resize(group);
        log_.assign(order_, 0);
        Elem x = 1;
        for (u64 i = 0; i < group; ++i) {
            exp_[i] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(i);
            x = mul_schoolbook(x, primitive_);
        }
        if (x != 1) throw ConsistencyError("primitive element failed to cycle");
    }
}

std::vector<u64> Field::digits(Elem a) const {
    std::vector<u64> d(degree_, 0);
    for (unsigned i = 0; i < degree_ && a != 0; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Field::Elem Field::from_digits(const std::vector<u64>& d) const {
    Elem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (i < degree_) a = a * p_ + d[i] % p_;
    }
    return a;
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    Elem r = 0;
    for (unsigned i = 0; i < degree_ && (a != 0 || b != 0); ++i) {
        const u64 s = (a % p_ + b % p_) % p_;
        r += s * pw_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Field::Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem r = 0;
    for (unsigned i = 0; i < degree_ && a != 0; ++i) {
        const u64 c = a % p_;
        if (c != 0) r += (p_ - c) * pw_[i];
        a /= p_;
    }
    return r;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul_schoolbook(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const std::vector<u64> da = digits(a);
    const std::vector<u64> db = digits(b);
    std::vector<u64> r(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) r[i + j] = (r[i + j] + mulmod(da[i], db[j], p_)) % p_;
    }
    for (std::size_t top = r.size(); top-- > degree_;) {
        const u64 c = r[top];
        if (c == 0) continue;
        const std::size_t shift = top - degree_;
        for (unsigned i = 0; i < degree_; ++i)
            r[shift + i] = (r[shift + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
        r[top] = 0;
    }
    r.resize(degree_);
    return from_digits(r);
}

Field::Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        u64 e = u64{log_[a]} + log_[b];
        if (e >= order_ - 1) e -= order_ - 1;
        return exp_[e];
    }
    return mul_schoolbook(a, b);
}

Field::Elem Field::pow(Elem a, u64 e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!exp_.empty()) return exp_[static_cast<u64>(static_cast<u128>(log_[a]) * e % (order_ - 1))];
    Elem result = 1;
    while (e != 0) {
        if (e & 1u) result = mul_schoolbook(result, a);
        e >>= 1;
        if (e != 0) a = mul_schoolbook(a, a);
    }
    return result;
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw InvalidInput("inverse of zero");
    if (!exp_.empty()) return exp_[log_[a] == 0 ? 0 : order_ - 1 - log_[a]];
    return pow(a, order_ - 2);
}

u64 Field::element_order(Elem a) const {
    if (a == 0) throw InvalidInput("zero has no multiplicative order");
    u64 t = order_ - 1;
    for (u64 r : prime_factors(order_ - 1)) {
        while (t % r == 0 && pow(a, t / r) == 1) t /= r;
    }
    return t;
}

Subfield::Subfield(const Field& small, const Field& big) {
    if (small.p() != big.p() || big.degree() % small.degree() != 0)
        throw InvalidInput("subfield degree must divide the field degree");
    // Roots of the small modulus lie in the subfield generated by
    // w = g^((p^E-1)/(p^e-1)); try the powers of w.
    const u64 q = small.order();
    const Field::Elem w = big.pow(big.primitive(), (big.order() - 1) / (q - 1));
    const std::vector<u64>& f = small.modulus();
    auto eval = [&](Field::Elem x) {
        Field::Elem acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = big.add(big.mul(acc, x), f[i]);
        return acc;
    };
    Field::Elem root = 0;
    bool found = false;
    Field::Elem x = 1;
    for (u64 k = 0; k + 1 < q && !found; ++k, x = big.mul(x, w)) {
        if (eval(x) == 0) {
            root = x;
            found = true;
        }
    }
    if (small.degree() == 1) {
        // Degree-one fields: the element value is its constant digit.
        root = 0;
        found = true;
    }
    if (!found) throw ConsistencyError("small-field modulus has no root in the extension");

    embed_.resize(q);
    for (Field::Elem u = 0; u < q; ++u) {
        const std::vector<u64> d = small.digits(u);
        Field::Elem acc = 0;
        for (std::size_t i = d.size(); i-- > 0;) acc = big.add(big.mul(acc, root), d[i]);
        embed_[u] = acc;
        project_.emplace(acc, u);
    }
    if (project_.size() != q) throw ConsistencyError("subfield embedding is not injective");
}

bool Subfield::project(Field::Elem big_elem, Field::Elem& out) const {
    auto it = project_.find(big_elem);
    if (it == project_.end()) return false;
    out = it->second;
    return true;
}

}  // namespace lcdbch
