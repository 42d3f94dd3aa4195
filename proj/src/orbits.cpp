#include "qsc/orbits.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

std::vector<uint32_t> divisors_of(uint32_t n) {
    std::vector<uint32_t> d;
    for (uint32_t t = 1; t <= n; ++t)
        if (n % t == 0) d.push_back(t);
    return d;
}

void classify_closed_form(OrbitReport& rep, const FieldSpec& F) {
    uint64_t G = F.group_order();
    rep.closed_form = ClosedFormStatus::Fails;
    rep.closed_form_t = 0;
    for (uint32_t tp : divisors_of(F.n())) {
        uint64_t qt = ipow_u64(F.q(), tp) - 1;
        if (rep.m * rep.length * qt == G) {
            rep.closed_form = ClosedFormStatus::Holds;
            rep.closed_form_t = tp;
            return;
        }
    }
}

} // namespace

uint32_t stabilizer_degree(const Subspace& V) {
    const FieldSpec& F = *V.field();
    uint64_t G = F.group_order();
    uint32_t best = 1;
    for (uint32_t t : divisors_of(F.n())) {
        uint64_t sub_order = ipow_u64(F.q(), t) - 1;
        uint32_t g = F.antilog(G / sub_order);
        if (V.scalar_shift(g) == V) best = t;
    }
    return best;
}

OrbitReport cyclic_orbit(const Subspace& V, uint64_t cap) {
    return quasi_orbit(V, 1, cap);
}

OrbitReport quasi_orbit(const Subspace& V, uint64_t m, uint64_t cap) {
    const FieldSpec& F = *V.field();
    uint64_t G = F.group_order();
    if (m == 0 || G % m != 0) throw Error(Errc::NotADivisor, "m must divide q^n - 1");
    uint32_t shift = F.antilog(m);

    OrbitReport rep;
    rep.kind = m == 1 ? OrbitKind::Cyclic : OrbitKind::Quasi;
    rep.m = m;
    rep.t = stabilizer_degree(V);

    Subspace w = V;
    do {
        if (rep.representatives.size() >= cap)
            throw Error(Errc::CapExceeded,
                        "orbit exceeds the cap of " + std::to_string(cap) + " subspaces");
        rep.representatives.push_back(w);
        w = w.scalar_shift(shift);
    } while (w != V);
    rep.length = rep.representatives.size();

    // closed-form cross-check: the shifts that fix V are exactly the powers of
    // gamma^m landing in F_{q^t}*, so the length divides out one gcd
    uint64_t M = G / m;
    uint64_t qt = ipow_u64(F.q(), rep.t) - 1;
    uint64_t expect = M / std::gcd(M, qt);
    if (expect != rep.length)
        throw std::logic_error("orbit enumeration disagrees with the stabilizer-derived length");

    if (m == 1) {
        rep.closed_form = ClosedFormStatus::NotApplicable;
    } else {
        classify_closed_form(rep, F);
    }
    rep.full_length = rep.m * rep.length * (F.q() - 1) == G;
    return rep;
}

Subspace frobenius_shift(const Subspace& V, uint32_t j) {
    const FieldSpec& F = *V.field();
    std::vector<uint32_t> rows;
    rows.reserve(V.rows().size());
    for (uint32_t r : V.rows()) rows.push_back(F.frobenius(r, j % F.n()));
    return Subspace::span(V.field(), rows);
}

OrbitReport frobenius_orbit(const Subspace& V) {
    OrbitReport rep;
    rep.kind = OrbitKind::Frobenius;
    rep.m = 1;
    rep.t = stabilizer_degree(V);
    Subspace w = V;
    do {
        rep.representatives.push_back(w);
        w = frobenius_shift(w, 1);
    } while (w != V);
    rep.length = rep.representatives.size();
    rep.closed_form = ClosedFormStatus::NotApplicable;
    rep.full_length = false;
    return rep;
}

bool equivalent_mod_t(const FieldSpec& F, uint32_t a, uint32_t b, uint64_t m, uint32_t t) {
    if (a == 0 || b == 0) throw Error(Errc::ZeroArgument, "equivalence is on nonzero elements");
    uint64_t G = F.group_order();
    if (m == 0 || G % m != 0) throw Error(Errc::NotADivisor, "m must divide q^n - 1");
    if (t == 0 || F.n() % t != 0) throw Error(Errc::NotADivisor, "t must divide n");
    uint64_t step = G / (ipow_u64(F.q(), t) - 1);
    uint64_t da = mulmod_u64(F.dlog(a), m, G);
    uint64_t db = mulmod_u64(F.dlog(b), m, G);
    return (da + G - db) % G % step == 0;
}

BigInt orbit_size_lower_bound(const LinearizedPoly& L, uint64_t m) {
    const FieldSpec& F = *L.field();
    if (m == 0) throw Error(Errc::BadArguments, "m must be positive");
    int K = L.q_degree();
    uint32_t best_t = 0;
    for (int s = 1; s < K; ++s) {
        if (L.coeff(static_cast<size_t>(s)) == 0) continue;
        uint32_t t = std::gcd(static_cast<uint32_t>(s), F.n());
        if (best_t == 0 || t < best_t) best_t = t;
    }
    if (best_t == 0)
        throw Error(Errc::NoInteriorCoefficient,
                    "no nonzero coefficient strictly between x and the leading term");
    BigInt G = BigInt(F.group_order());
    BigInt den = BigInt(m) * (BigInt(ipow_u64(F.q(), best_t)) - 1);
    return (G + den - 1) / den;
}

} // namespace qsc
