#include "qsc/codes.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "qsc/errors.hpp"
#include "qsc/linpoly.hpp"
#include "qsc/poly.hpp"

namespace qsc {

namespace {

// q = p^e for a prime power, or throw
void split_prime_power(uint32_t q, uint32_t& p, uint32_t& e) {
    if (q < 2) throw Error(Errc::BadArguments, "q must be a prime power, at least 2");
    p = 2;
    while (q % p != 0) ++p;
    e = 0;
    uint32_t rest = q;
    while (rest % p == 0) { rest /= p; ++e; }
    if (rest != 1) throw Error(Errc::BadArguments, "q must be a prime power");
}

uint32_t top_interior_index(const LinearizedPoly& L) {
    for (int j = L.q_degree() - 1; j >= 0; --j)
        if (L.coeff(static_cast<size_t>(j))) return static_cast<uint32_t>(j);
    return 0;
}

std::string u2s(uint64_t v) { return std::to_string(v); }

} // namespace

void Code::normalize() {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

bool Code::constant_dimension() const {
    for (const Subspace& w : words)
        if (w.dim() != words.front().dim()) return false;
    return true;
}

uint32_t min_distance(const std::vector<Subspace>& words) {
    if (words.size() < 2)
        throw Error(Errc::TooFewWords, "minimum distance needs at least two words");
    bool constant = true;
    for (const Subspace& w : words)
        if (w.dim() != words.front().dim()) { constant = false; break; }
    const uint32_t floor_d = constant ? 2 : 1;   // distinct words cannot get closer than this

    const size_t W = words.size();
    unsigned T = std::max(1u, std::thread::hardware_concurrency());
    T = std::min<unsigned>(T, 8);
    if (W < 512) T = 1;

    std::atomic<uint32_t> best{UINT32_MAX};
    auto worker = [&](unsigned tid) {
        for (size_t i = tid; i + 1 < W; i += T) {
            if (best.load(std::memory_order_relaxed) <= floor_d) return;
            for (size_t j = i + 1; j < W; ++j) {
                uint32_t d = distance(words[i], words[j]);
                uint32_t cur = best.load(std::memory_order_relaxed);
                while (d < cur && !best.compare_exchange_weak(cur, d)) {}
                if (d <= floor_d) return;
            }
        }
    };
    if (T == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < T; ++t) pool.emplace_back(worker, t);
        for (std::thread& th : pool) th.join();
    }
    return best.load();
}

uint32_t min_distance(const Code& C) { return min_distance(C.words); }

bool verify_quasi_cyclic(const Code& C, uint64_t m) {
    const FieldSpec& F = *C.field;
    uint64_t G = F.group_order();
    if (m == 0 || G % m != 0) throw Error(Errc::NotADivisor, "m must divide q^n - 1");
    std::unordered_set<Subspace, SubspaceHash> have(C.words.begin(), C.words.end());
    uint32_t g = F.antilog(m);
    for (const Subspace& w : C.words)
        if (!have.count(w.scalar_shift(g))) return false;
    return true;
}

BigInt ev_bound(uint32_t n, uint32_t k, uint32_t delta, uint32_t q) {
    if (delta > k || k > n) throw Error(Errc::BadArguments, "needs 0 <= delta <= k <= n");
    return gaussian(n, k, q) / gaussian(n - k + delta, delta, q);
}

PairBound shift_intersection_bound(const Subspace& V, const Subspace& U, uint32_t alpha,
                                   uint64_t m) {
    if (V == U) throw Error(Errc::EqualSubspaces, "the bound compares distinct subspaces");
    const Subspace* lo = &V;
    const Subspace* hi = &U;
    if (lo->dim() > hi->dim()) std::swap(lo, hi);
    uint32_t k = lo->dim(), l = hi->dim();
    uint32_t t = top_interior_index(subspace_poly(*lo));
    uint32_t s = top_interior_index(subspace_poly(*hi));

    const FieldSpec& F = *V.field();
    uint32_t shift = F.pow(alpha, m);
    Subspace sv = lo->scalar_shift(shift);
    Subspace su = hi->scalar_shift(shift);

    PairBound r;
    r.intersection_dim = intersect_dim(sv, su);
    r.dim_bound = std::max(s, t + l - k);
    r.dim_ok = r.intersection_dim <= r.dim_bound;
    r.dist = k + l - 2 * r.intersection_dim;
    if (k == l) {
        r.dist_bound = 2 * std::min(k - t, k - s);
        r.dist_ok = r.dist >= r.dist_bound;
    } else {
        r.dist_bound = 0;
        r.dist_ok = true;
    }
    return r;
}

bool coefficient_condition(const FieldSpec& F, uint32_t a0, uint32_t as, uint32_t k, uint32_t s) {
    if (a0 == 0 || as == 0) throw Error(Errc::ZeroCoefficient, "both coefficients must be nonzero");
    if (s == 0 || s >= k) throw Error(Errc::BadArguments, "needs 1 <= s < k");
    uint64_t G = F.group_order();
    uint64_t d0 = F.dlog(a0), ds = F.dlog(as);
    uint64_t qk = ipow_u64(F.q(), k), qs = ipow_u64(F.q(), s);
    uint64_t x, y;
    if (k % s == 0) {
        x = mulmod_u64(d0, (qk - qs) / (qs - 1) % G, G);
        y = mulmod_u64(ds, (qk - 1) / (qs - 1) % G, G);
    } else {
        // clear the (q^s - 1) denominator; a power landing in F_q* keeps the
        // test conservative in the right direction
        x = mulmod_u64(d0, (qk - qs) % G, G);
        y = mulmod_u64(ds, (qk - 1) % G, G);
    }
    uint64_t diff = (x + G - y) % G;
    return diff % (G / (F.q() - 1)) != 0;
}

Code construct_single_orbit(uint32_t q, uint32_t n, uint32_t k, uint32_t s, uint64_t m,
                            uint32_t cap_table_bits, uint64_t cap_orbit) {
    if (s == 0 || s >= k) throw Error(Errc::BadArguments, "needs 1 <= s < k");
    uint32_t p, e;
    split_prime_power(q, p, e);
    uint64_t qk1 = ipow_u64(q, k) - 1;
    if (n == 0 || n % qk1 != 0)
        throw Error(Errc::DivisibilityViolated, "q^k - 1 must divide n");
    BaseField B = BaseField::make(p, e);
    if (!is_irreducible(Poly::trinomial(&B, k, s)))
        throw Error(Errc::TrinomialReducible, "the defining trinomial is reducible over F_q");
    Field F = FieldSpec::create_auto(p, e, n, cap_table_bits);
    uint64_t G = F->group_order();
    if (m == 0 || G % m != 0)
        throw Error(Errc::DivisibilityViolated, "m must divide q^n - 1");

    std::vector<uint32_t> coeffs(k + 1, 0);
    coeffs[0] = 1;
    coeffs[s] = 1;
    coeffs[k] = 1;
    LinearizedPoly L(F, coeffs);
    Subspace V = kernel(L);
    if (V.dim() != k) throw std::logic_error("trinomial kernel did not reach full dimension");

    OrbitReport rep = quasi_orbit(V, m, cap_orbit);
    Code C;
    C.field = F;
    C.m = m;
    C.words = rep.representatives;
    C.normalize();
    C.provenance.construction = "single-orbit";
    C.provenance.inputs = {{"q", u2s(q)}, {"n", u2s(n)}, {"k", u2s(k)},
                           {"s", u2s(s)}, {"m", u2s(m)}};
    C.provenance.generators.push_back(V);

    BigInt bound = orbit_size_lower_bound(L, m);
    if (BigInt(rep.length) < bound)
        throw std::logic_error("orbit length fell below its guaranteed lower bound");
    C.provenance.notes.push_back("orbit length " + u2s(rep.length) + ", lower bound " +
                                 bound.str());
    if (C.words.size() >= 2) {
        uint32_t d = min_distance(C.words);
        if (d < 2 * (k - s))
            throw std::logic_error("minimum distance fell below 2(k - s)");
        C.provenance.notes.push_back("minimum distance " + u2s(d) + ", guaranteed " +
                                     u2s(2 * (k - s)));
    }
    if (std::gcd(n, s) == 1 && m == 1 && !rep.full_length)
        throw std::logic_error("expected a full-length orbit");
    if (rep.full_length) C.provenance.notes.push_back("full-length orbit");
    return C;
}

namespace {

MultiOrbitReport multi_orbit_core(uint32_t q, uint32_t n, uint32_t k, uint32_t s, uint64_t m,
                                  std::optional<std::pair<uint64_t, uint64_t>> literal,
                                  uint32_t N_cap, uint32_t cap_table_bits, uint64_t cap_orbit) {
    if (s == 0 || s >= k) throw Error(Errc::BadArguments, "needs 1 <= s < k");
    uint32_t p, e;
    split_prime_power(q, p, e);
    if (!is_prime_u64(n)) throw Error(Errc::NotPrime, "the construction needs n prime");
    Field Fs = FieldSpec::create_auto(p, e, n, cap_table_bits);
    uint64_t G = Fs->group_order();
    if (m == 0 || G % m != 0) throw Error(Errc::NotADivisor, "m must divide q^n - 1");

    MultiOrbitReport R;
    R.n = n;
    if (literal) {
        R.a0_exp = literal->first % G;
        R.as_exp = literal->second % G;
        if (!coefficient_condition(*Fs, Fs->antilog(R.a0_exp), Fs->antilog(R.as_exp), k, s))
            throw Error(Errc::ConditionFailed,
                        "the coefficients are F_q*-equivalent; conjugate orbits would collide");
    } else {
        R.a0_exp = m % G;
        R.as_exp = mulmod_u64(m, ipow_u64(q, s) % G, G);
        if (!coefficient_condition(*Fs, Fs->antilog(R.a0_exp), Fs->antilog(R.as_exp), k, s)) {
            // the canonical gamma^m pair degenerates for this m; the gamma pair
            // keeps the same kernel family and always separates for n >= 2
            R.used_fallback = true;
            R.a0_exp = 1;
            R.as_exp = ipow_u64(q, s) % G;
            if (!coefficient_condition(*Fs, Fs->antilog(R.a0_exp), Fs->antilog(R.as_exp), k, s))
                throw Error(Errc::ConditionFailed, "no separating coefficient pair available");
        }
    }

    std::vector<uint32_t> coeffs(k + 1, 0);
    coeffs[0] = Fs->antilog(R.a0_exp);
    coeffs[s] = Fs->antilog(R.as_exp);
    coeffs[k] = 1;
    LinearizedPoly L(Fs, coeffs);
    R.N = splitting_field_degree(L, N_cap);
    if (R.N % n != 0)
        throw Error(Errc::BadArguments,
                    "splitting degree is not a multiple of the coefficient field degree");

    Field Fb = FieldSpec::create_auto(p, e, R.N, cap_table_bits);
    Embedding emb(Fs, Fb);
    Subspace V = kernel(embed_poly(L, emb));
    if (V.dim() != k)
        throw std::logic_error("kernel did not reach full dimension in the splitting field");

    Code C;
    C.field = Fb;
    C.m = m;
    std::unordered_set<Subspace, SubspaceHash> seen;
    bool disjoint = true;
    for (uint32_t i = 0; i < n; ++i) {
        Subspace vi = frobenius_shift(V, i);
        C.provenance.generators.push_back(vi);
        OrbitReport rep = quasi_orbit(vi, m, cap_orbit);
        R.orbit_lengths.push_back(rep.length);
        for (const Subspace& w : rep.representatives) {
            if (seen.insert(w).second) C.words.push_back(w);
            else disjoint = false;
        }
    }
    R.orbits_disjoint = disjoint;
    C.normalize();
    C.provenance.construction = "multi-orbit";
    C.provenance.inputs = {{"q", u2s(q)},         {"n", u2s(n)},
                           {"k", u2s(k)},         {"s", u2s(s)},
                           {"m", u2s(m)},         {"N", u2s(R.N)},
                           {"a0_exp", u2s(R.a0_exp)}, {"as_exp", u2s(R.as_exp)}};
    if (R.used_fallback)
        C.provenance.notes.push_back("canonical coefficient pair was degenerate; used the "
                                     "gamma pair instead");

    R.measured_distance = C.words.size() >= 2 ? min_distance(C.words) : 0;
    R.quasi_closed = verify_quasi_cyclic(C, m);
    BigInt qN = 1;
    for (uint32_t i = 0; i < R.N; ++i) qN *= q;
    R.formula_num = BigInt(n) * (qN - 1);
    R.formula_den = BigInt(m) * (q - 1);
    R.size_matches_formula = BigInt(C.words.size()) * R.formula_den == R.formula_num;
    C.provenance.notes.push_back(std::string("conjugate orbits ") +
                                 (disjoint ? "disjoint" : "overlap"));
    C.provenance.notes.push_back("size " + u2s(C.words.size()) +
                                 (R.size_matches_formula ? " matches " : " differs from ") +
                                 "n(q^N - 1)/(m(q - 1)) = " + R.formula_num.str() + "/" +
                                 R.formula_den.str());
    R.code = std::move(C);
    return R;
}

} // namespace

MultiOrbitReport construct_multi_orbit(uint32_t q, uint32_t n, uint32_t k, uint32_t s, uint64_t m,
                                       uint32_t N_cap, uint32_t cap_table_bits,
                                       uint64_t cap_orbit) {
    return multi_orbit_core(q, n, k, s, m, std::nullopt, N_cap, cap_table_bits, cap_orbit);
}

MultiOrbitReport construct_multi_orbit_with_coeffs(uint32_t q, uint32_t n, uint32_t k, uint32_t s,
                                                   uint64_t m, uint64_t a0_exp, uint64_t as_exp,
                                                   uint32_t N_cap, uint32_t cap_table_bits,
                                                   uint64_t cap_orbit) {
    return multi_orbit_core(q, n, k, s, m, std::make_pair(a0_exp, as_exp), N_cap, cap_table_bits,
                            cap_orbit);
}

RefineReport refine_to_quasi(const Code& C, uint64_t m) {
    if (C.words.empty()) throw Error(Errc::TooFewWords, "cannot refine an empty code");
    if (!verify_quasi_cyclic(C, 1)) throw Error(Errc::BadArguments, "the code is not cyclic");
    const FieldSpec& F = *C.field;
    uint32_t g1 = F.antilog(1);

    RefineReport R;
    R.m = m;
    std::vector<Subspace> leaders;
    std::unordered_set<Subspace, SubspaceHash> used;
    for (const Subspace& w : C.words) {
        if (used.count(w)) continue;
        uint64_t len = 0;
        Subspace cur = w;
        do {
            used.insert(cur);
            ++len;
            cur = cur.scalar_shift(g1);
        } while (cur != w);
        R.cyclic_lengths.push_back(len);
        leaders.push_back(w);
    }

    uint64_t g = 0;
    for (uint64_t len : R.cyclic_lengths) g = std::gcd(g, len);
    if (m == 0 || g % m != 0)
        throw Error(Errc::GcdViolated,
                    "m must divide every cyclic orbit length (their gcd is " + u2s(g) + ")");

    std::unordered_set<Subspace, SubspaceHash> have(C.words.begin(), C.words.end());
    std::unordered_set<Subspace, SubspaceHash> covered;
    bool exact = true;
    for (size_t i = 0; i < leaders.size(); ++i) {
        Subspace start = leaders[i];
        for (uint64_t j = 0; j < m; ++j) {
            OrbitReport rep = quasi_orbit(start, m);
            if (rep.length * m != R.cyclic_lengths[i]) exact = false;
            for (const Subspace& w : rep.representatives) {
                if (!have.count(w) || !covered.insert(w).second) exact = false;
            }
            R.quasi_orbits.push_back(std::move(rep.representatives));
            start = start.scalar_shift(g1);
        }
    }
    if (covered.size() != C.words.size()) exact = false;
    R.partition_exact = exact;
    return R;
}

AuditReport audit_code(const Code& C) {
    AuditReport R;
    const FieldSpec& F = *C.field;
    R.q = F.q();
    R.n = F.n();
    R.size = C.words.size();
    R.constant_dimension = C.constant_dimension();
    R.k = C.dim();
    R.d = R.size >= 2 ? min_distance(C.words) : 0;
    R.quasi_closed = R.size == 0 ? true : verify_quasi_cyclic(C, C.m);
    if (!R.quasi_closed)
        R.mismatches.push_back("word set is not closed under the gamma^" + u2s(C.m) + " shift");
    if (R.constant_dimension && R.size >= 2 && R.d >= 2 && R.d % 2 == 0) {
        R.has_bound = true;
        R.bound = ev_bound(R.n, R.k, (R.d - 2) / 2, R.q);
        if (BigInt(R.size) > R.bound)
            R.mismatches.push_back("size " + u2s(R.size) + " exceeds the packing bound " +
                                   R.bound.str());
    }
    if (C.claimed) {
        const Claimed& cl = *C.claimed;
        if (cl.n != R.n)
            R.mismatches.push_back("claimed n = " + u2s(cl.n) + " but the field has degree " +
                                   u2s(R.n));
        if (!R.constant_dimension)
            R.mismatches.push_back("claimed a single dimension but the code mixes dimensions");
        else if (cl.k != R.k)
            R.mismatches.push_back("claimed k = " + u2s(cl.k) + " but the words have dimension " +
                                   u2s(R.k));
        if (cl.size != R.size)
            R.mismatches.push_back("claimed size " + u2s(cl.size) + " but counted " + u2s(R.size));
        if (R.size >= 2 && cl.d != R.d)
            R.mismatches.push_back("claimed distance " + u2s(cl.d) + " but measured " + u2s(R.d));
    }
    return R;
}

} // namespace qsc
