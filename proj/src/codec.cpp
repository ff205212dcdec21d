#include "lcdbch/codec.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <string>
#include <thread>

#include "lcdbch/error.hpp"

namespace lcdbch {

std::size_t FieldPoly::degree() const {
    if (coeffs.empty()) throw InvalidInput("degree of the zero polynomial");
    return coeffs.size() - 1;
}

namespace {

void trim(FieldPoly& a) {
    while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
}

}  // namespace

FieldPoly poly_add(const Field& f, const FieldPoly& a, const FieldPoly& b) {
    FieldPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        const Field::Elem x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        const Field::Elem y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        r.coeffs[i] = f.add(x, y);
    }
    trim(r);
    return r;
}

FieldPoly poly_mul(const Field& f, const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FieldPoly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        const Field::Elem x = a.coeffs[i];
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j] != 0) r.coeffs[i + j] = f.add(r.coeffs[i + j], f.mul(x, b.coeffs[j]));
        }
    }
    trim(r);
    return r;
}

std::pair<FieldPoly, FieldPoly> poly_divmod(const Field& f, const FieldPoly& a, const FieldPoly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    FieldPoly rem = a;
    trim(rem);
    const std::size_t db = b.degree();
    const Field::Elem lead_inv = f.inv(b.coeffs.back());
    FieldPoly quot;
    if (rem.coeffs.size() > db) quot.coeffs.assign(rem.coeffs.size() - db, 0);
    while (!rem.is_zero() && rem.coeffs.size() > db) {
        const std::size_t shift = rem.coeffs.size() - 1 - db;
        const Field::Elem c = f.mul(rem.coeffs.back(), lead_inv);
        quot.coeffs[shift] = c;
        for (std::size_t i = 0; i <= db; ++i)
            rem.coeffs[shift + i] = f.sub(rem.coeffs[shift + i], f.mul(c, b.coeffs[i]));
        trim(rem);
    }
    trim(quot);
    return {std::move(quot), std::move(rem)};
}

FieldPoly x_pow_minus_one(const Field& f, u64 n) {
    FieldPoly r;
    r.coeffs.assign(n + 1, 0);
    r.coeffs[0] = f.neg(1);
    r.coeffs[n] = 1;
    return r;
}

std::shared_ptr<const Extension> build_extension(u64 q, u64 n, u64 order_cap) {
    const PrimePower pq(q);
    CosetContext ctx(q, n);
    const u64 t = ctx.ord();
    if (big_pow(q, t) > order_cap)
        throw DeskScaleExceeded("extension GF(" + std::to_string(q) + "^" + std::to_string(t) +
                                ") exceeds desk-scale field cap " + std::to_string(order_cap));
    Field base(pq.p(), pq.e());
    Field big(pq.p(), static_cast<unsigned>(pq.e() * t), kDefaultFieldSeed, order_cap);
    Subfield sub(base, big);
    const Field::Elem alpha = big.primitive();
    const Field::Elem beta = big.pow(alpha, (big.order() - 1) / n);
    if (big.element_order(beta) != n) throw ConsistencyError("beta does not have order n");
    return std::make_shared<const Extension>(
        Extension{q, n, static_cast<unsigned>(t), std::move(base), std::move(big), std::move(sub), alpha, beta, ctx});
}

FieldPoly minimal_poly(const Extension& ext, u64 i) {
    const Coset c = coset_of(ext.cosets, i % ext.n, true);
    const Field& big = ext.big;
    std::vector<Field::Elem> prod{1};  // over the big field
    for (u64 j : c.elements) {
        const Field::Elem root = big.pow(ext.beta, j);
        std::vector<Field::Elem> next(prod.size() + 1, 0);
        for (std::size_t d = 0; d < prod.size(); ++d) {
            next[d + 1] = big.add(next[d + 1], prod[d]);
            next[d] = big.sub(next[d], big.mul(root, prod[d]));
        }
        prod = std::move(next);
    }
    FieldPoly out;
    out.coeffs.resize(prod.size());
    for (std::size_t d = 0; d < prod.size(); ++d) {
        if (!ext.sub.project(prod[d], out.coeffs[d]))
            throw ConsistencyError("minimal polynomial of beta^" + std::to_string(i) +
                                   " has a coefficient outside GF(q)");
    }
    return out;
}

Field::Elem evaluate_at_power(const Extension& ext, const FieldPoly& c, u64 i) {
    const Field& big = ext.big;
    const Field::Elem x = big.pow(ext.beta, i % ext.n);
    Field::Elem acc = 0;
    for (std::size_t d = c.coeffs.size(); d-- > 0;) acc = big.add(big.mul(acc, x), ext.sub.embed(c.coeffs[d]));
    return acc;
}

CyclicCode generator_poly(std::shared_ptr<const Extension> ext, const BigUint& delta, u64 b) {
    const DefiningSet t = defining_set(ext->cosets, delta, b);
    CyclicCode code;
    code.n = ext->n;
    code.defining_set = t.indices();
    std::vector<bool> used(ext->n, false);
    FieldPoly g{{1}};
    for (u64 i : code.defining_set) {
        if (used[i]) continue;
        const FieldPoly mi = minimal_poly(*ext, i);
        for (u64 x = i, steps = 0; steps < mi.coeffs.size() - 1; ++steps, x = ext->cosets.next(x)) used[x] = true;
        g = poly_mul(ext->base, g, mi);
    }
    if (g.degree() != t.cardinality()) throw ConsistencyError("deg g differs from |T|");
    code.k = code.n - g.degree();
    code.generator = std::move(g);
    code.ext = std::move(ext);
    return code;
}

CyclicCode generator_poly(const BchSpec& spec, u64 order_cap) {
    spec.validate();
    return generator_poly(build_extension(spec.q, to_u64(spec.n()), order_cap), spec.delta, spec.b);
}

CyclicCode code_from_generator(std::shared_ptr<const Extension> ext, FieldPoly g) {
    trim(g);
    if (g.is_zero()) throw InvalidInput("generator must be nonzero");
    auto [h, r] = poly_divmod(ext->base, x_pow_minus_one(ext->base, ext->n), g);
    if (!r.is_zero()) throw InvalidInput("generator does not divide x^n - 1");
    CyclicCode code;
    code.n = ext->n;
    for (u64 i = 0; i < ext->n; ++i)
        if (evaluate_at_power(*ext, g, i) == 0) code.defining_set.push_back(i);
    code.k = code.n - g.degree();
    code.generator = std::move(g);
    code.ext = std::move(ext);
    return code;
}

FieldPoly check_polynomial(const CyclicCode& code) {
    auto [h, r] = poly_divmod(code.field(), x_pow_minus_one(code.field(), code.n), code.generator);
    if (!r.is_zero()) throw ConsistencyError("generator does not divide x^n - 1");
    if (poly_mul(code.field(), code.generator, h) != x_pow_minus_one(code.field(), code.n))
        throw ConsistencyError("g * h differs from x^n - 1");
    return h;
}

FieldPoly reciprocal(const Field& f, const FieldPoly& g) {
    if (g.is_zero() || g.coeffs[0] == 0) throw InvalidInput("reciprocal undefined when g(0) = 0");
    const Field::Elem c = f.inv(g.coeffs[0]);
    FieldPoly r;
    r.coeffs.assign(g.coeffs.rbegin(), g.coeffs.rend());
    for (auto& x : r.coeffs) x = f.mul(c, x);
    return r;
}

bool is_lcd(const CyclicCode& code) { return reciprocal(code.field(), code.generator) == code.generator; }

std::vector<Field::Elem> encode(const CyclicCode& code, const std::vector<Field::Elem>& message) {
    if (message.size() != code.k) throw InvalidInput("message length must equal k");
    for (Field::Elem x : message)
        if (x >= code.field().order()) throw InvalidInput("message symbol outside GF(q)");
    FieldPoly m{message};
    trim(m);
    FieldPoly c = poly_mul(code.field(), m, code.generator);
    std::vector<Field::Elem> word(code.n, 0);
    std::copy(c.coeffs.begin(), c.coeffs.end(), word.begin());
    return word;
}

u64 hamming_weight(const std::vector<Field::Elem>& word) {
    return static_cast<u64>(std::count_if(word.begin(), word.end(), [](Field::Elem x) { return x != 0; }));
}

namespace {

// Small-field tables for the enumeration inner loop.
struct SymbolTables {
    u64 q;
    std::vector<std::uint8_t> add;      // q*q
    std::vector<std::uint8_t> order;    // sigma_0..sigma_{q-1}: a fixed listing of GF(q), sigma_0 = 0
    std::vector<std::uint8_t> step;     // sigma_{s+1} - sigma_s (cyclically)
    std::vector<std::vector<std::uint8_t>> scaled_g;  // x * g for each x

    SymbolTables(const Field& f, const FieldPoly& g) : q(f.order()) {
        add.resize(q * q);
        for (u64 a = 0; a < q; ++a)
            for (u64 b = 0; b < q; ++b) add[a * q + b] = static_cast<std::uint8_t>(f.add(a, b));
        order.resize(q);
        for (u64 s = 0; s < q; ++s) order[s] = static_cast<std::uint8_t>(s);
        step.resize(q);
        for (u64 s = 0; s < q; ++s) step[s] = static_cast<std::uint8_t>(f.sub(order[(s + 1) % q], order[s]));
        scaled_g.resize(q);
        for (u64 x = 0; x < q; ++x) {
            scaled_g[x].resize(g.coeffs.size());
            for (std::size_t i = 0; i < g.coeffs.size(); ++i)
                scaled_g[x][i] = static_cast<std::uint8_t>(f.mul(x, g.coeffs[i]));
        }
    }
};

// Adds x * x^shift g(x) to word and returns the new weight.
inline u64 add_row(const SymbolTables& tb, std::vector<std::uint8_t>& word, u64 weight, std::size_t shift,
                   std::uint8_t x) {
    const std::vector<std::uint8_t>& row = tb.scaled_g[x];
    std::uint8_t* w = word.data() + shift;
    const std::uint8_t* add = tb.add.data();
    const u64 q = tb.q;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const std::uint8_t r = row[i];
        if (r == 0) continue;
        const std::uint8_t old = w[i];
        const std::uint8_t nw = add[old * q + r];
        weight += (nw != 0);
        weight -= (old != 0);
        w[i] = nw;
    }
    return weight;
}

u64 q_valuation(u64 i, u64 q) {
    u64 v = 0;
    while (i % q == 0) {
        i /= q;
        ++v;
    }
    return v;
}

}  // namespace

DistanceResult min_distance_exhaustive(const CyclicCode& code, u64 budget, unsigned threads) {
    const Field& f = code.field();
    const u64 q = f.order();
    if (q > 256) throw InvalidInput("exhaustive distance search supports q <= 256");
    if (code.k == 0) throw InvalidInput("the zero code has no minimum distance");
    if (budget == 0) throw InvalidInput("distance budget must be >= 1");
    const SymbolTables tb(f, code.generator);
    const u64 k = code.k;
    const bool within = (big_pow(q, k) - 1) / (q - 1) <= budget;

    // Work item (lead, c): leading symbol 1 at position lead, symbol c at
    // lead-1 (when lead >= 1), all lower symbols enumerated.
    struct Item {
        u64 lead;
        std::uint8_t c;
        u64 count;  // q^(lead-1), or 1
    };
    std::vector<Item> items;
    items.push_back({0, 0, 1});
    for (u64 lead = 1; lead < k; ++lead) {
        const u64 count = to_u64(big_pow(q, lead - 1));
        for (u64 c = 0; c < q; ++c) items.push_back({lead, static_cast<std::uint8_t>(c), count});
    }

    std::atomic<u64> best{code.n + 1};
    std::atomic<u64> reserved{0};
    std::atomic<u64> visited{0};
    std::atomic<std::size_t> next{0};
    std::atomic<bool> truncated{false};

    auto worker = [&]() {
        std::vector<std::uint8_t> word(code.n);
        std::vector<std::uint8_t> state(k);
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= items.size()) return;
            const Item& it = items[idx];
            u64 todo = it.count;
            if (!within) {
                const u64 before = reserved.fetch_add(it.count);
                if (before >= budget) {
                    truncated = true;
                    return;
                }
                if (before + it.count > budget) {
                    todo = budget - before;
                    truncated = true;
                }
            }
            std::fill(word.begin(), word.end(), 0);
            std::fill(state.begin(), state.end(), 0);
            u64 weight = add_row(tb, word, 0, it.lead, 1);
            if (it.lead >= 1 && it.c != 0) weight = add_row(tb, word, weight, it.lead - 1, tb.order[it.c]);
            u64 local_best = weight;
            for (u64 i = 1; i < todo; ++i) {
                const u64 v = q_valuation(i, q);
                const std::uint8_t s = state[v];
                weight = add_row(tb, word, weight, v, tb.step[s]);
                state[v] = static_cast<std::uint8_t>((s + 1) % q);
                if (weight < local_best) local_best = weight;
            }
            visited += todo;
            u64 cur = best.load();
            while (local_best < cur && !best.compare_exchange_weak(cur, local_best)) {
            }
        }
    };

    unsigned nthreads = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return DistanceResult{best.load(), !truncated.load(), visited.load()};
}

u64 min_distance_sample(const CyclicCode& code, u64 trials, u64 seed) {
    if (trials == 0) throw InvalidInput("trials must be >= 1");
    const u64 q = code.field().order();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> sym(0, q - 1);
    u64 best = code.n + 1;
    std::vector<Field::Elem> msg(code.k);
    for (u64 t = 0; t < trials; ++t) {
        bool nonzero = false;
        do {
            for (auto& x : msg) {
                x = sym(rng);
                nonzero |= (x != 0);
            }
        } while (!nonzero);
        best = std::min(best, hamming_weight(encode(code, msg)));
    }
    return best;
}

}  // namespace lcdbch
