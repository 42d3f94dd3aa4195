#include "qsc/linpoly.hpp"

#include <future>
#include <string>

#include "qsc/errors.hpp"

namespace qsc {

LinearizedPoly::LinearizedPoly(const Field& f, std::vector<uint32_t> qcoeffs)
    : field_(f), a_(std::move(qcoeffs)) {
    for (uint32_t c : a_)
        if (c >= f->size()) throw Error(Errc::BadArguments, "coefficient code out of range");
    while (!a_.empty() && a_.back() == 0) a_.pop_back();
}

uint32_t LinearizedPoly::eval(uint32_t x) const {
    const FieldSpec& F = *field_;
    uint32_t acc = 0, xq = x;
    for (size_t j = 0; j < a_.size(); ++j) {
        if (a_[j]) acc = F.add(acc, F.mul(a_[j], xq));
        xq = F.frobenius(xq, 1);
    }
    return acc;
}

LinearizedPoly subspace_poly(const Subspace& V) {
    const Field& f = V.field();
    const FieldSpec& F = *f;
    std::vector<uint32_t> a{1};   // the identity map x
    for (uint32_t b : V.rows()) {
        uint32_t lb = 0, bq = b;
        for (size_t j = 0; j < a.size(); ++j) {
            if (a[j]) lb = F.add(lb, F.mul(a[j], bq));
            bq = F.frobenius(bq, 1);
        }
        // b is independent of the kernel built so far, so L(b) != 0
        uint32_t c = F.pow(lb, F.q() - 1);
        std::vector<uint32_t> next(a.size() + 1, 0);
        for (size_t j = 0; j < a.size(); ++j) {
            next[j + 1] = F.frobenius(a[j], 1);
            next[j] = F.sub(next[j], F.mul(c, a[j]));
        }
        a = std::move(next);
    }
    return LinearizedPoly(f, std::move(a));
}

LinearizedPoly embed_poly(const LinearizedPoly& L, const Embedding& emb) {
    if (L.field().get() != emb.small().get())
        throw Error(Errc::FieldMismatch, "polynomial is not over the embedding's small field");
    std::vector<uint32_t> a;
    a.reserve(L.coeffs().size());
    for (uint32_t c : L.coeffs()) a.push_back(emb.map(c));
    return LinearizedPoly(emb.big(), std::move(a));
}

Subspace kernel(const LinearizedPoly& L, const Field& ambient) {
    const LinearizedPoly* use = &L;
    LinearizedPoly lifted;
    if (L.field().get() != ambient.get()) {
        Embedding emb(L.field(), ambient);
        lifted = embed_poly(L, emb);
        use = &lifted;
    }
    const FieldSpec& F = *ambient;
    const BaseField& B = F.base();
    uint32_t n = F.n();

    // column i holds the coordinates of L(e_i) for basis vector e_i
    std::vector<std::vector<uint32_t>> M(n, std::vector<uint32_t>(n, 0));
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t img = use->eval(F.digit_set(0, i, 1));
        for (uint32_t r = 0; r < n; ++r) M[r][i] = F.digit(img, r);
    }

    std::vector<int> pivot_of_col(n, -1);
    uint32_t rank = 0;
    for (uint32_t col = 0; col < n && rank < n; ++col) {
        uint32_t sel = rank;
        while (sel < n && M[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(M[sel], M[rank]);
        uint32_t lead = B.inv(M[rank][col]);
        for (uint32_t c = 0; c < n; ++c) M[rank][c] = B.mul(M[rank][c], lead);
        for (uint32_t r = 0; r < n; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            uint32_t d = M[r][col];
            for (uint32_t c = 0; c < n; ++c) M[r][c] = B.sub(M[r][c], B.mul(d, M[rank][c]));
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }

    std::vector<uint32_t> gens;
    for (uint32_t f = 0; f < n; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        uint32_t v = F.digit_set(0, f, 1);
        for (uint32_t c = 0; c < n; ++c) {
            int r = pivot_of_col[c];
            if (r >= 0 && M[r][f]) v = F.digit_set(v, c, B.neg(M[r][f]));
        }
        gens.push_back(v);
    }
    return Subspace::span(ambient, gens);
}

LinearizedPoly scale_conjugate(const LinearizedPoly& L, uint32_t alpha, uint64_t m) {
    if (alpha == 0) throw Error(Errc::ZeroScalar, "conjugating scalar must be nonzero");
    const FieldSpec& F = *L.field();
    if (L.is_zero() || alpha == 1) return L;
    uint64_t G = F.group_order();
    uint64_t da = mulmod_u64(F.dlog(alpha) % G, m % G, G);
    uint32_t K = static_cast<uint32_t>(L.q_degree());
    uint64_t qK = ipow_u64(F.q(), K);
    std::vector<uint32_t> a = L.coeffs();
    for (uint32_t j = 0; j < K; ++j) {
        if (!a[j]) continue;
        uint64_t gap = (qK - ipow_u64(F.q(), j)) % G;
        a[j] = F.mul(a[j], F.antilog(mulmod_u64(da, gap, G)));
    }
    return LinearizedPoly(L.field(), std::move(a));
}

LinearizedPoly frobenius_conjugate(const LinearizedPoly& L, uint32_t s) {
    const FieldSpec& F = *L.field();
    std::vector<uint32_t> a = L.coeffs();
    for (uint32_t& c : a) c = F.frobenius(c, s % F.n());
    return LinearizedPoly(L.field(), std::move(a));
}

bool divides_xqn_minus_x(const LinearizedPoly& L, uint32_t N) {
    if (L.is_zero()) throw Error(Errc::BadArguments, "zero polynomial divides nothing");
    if (L.coeff(0) == 0)
        throw Error(Errc::BadArguments, "needs a nonzero x coefficient (simple roots)");
    const FieldSpec& F = *L.field();
    uint32_t K = static_cast<uint32_t>(L.q_degree());
    if (K == 0) return true;   // L = a_0 x, kernel {0}
    uint32_t lead_inv = F.inv(L.coeff(K));

    // r holds x^{q^step} mod L, q-degree < K; one step composes with x^q and
    // reduces the top term by the matching scalar multiple of L
    std::vector<uint32_t> r(K, 0);
    r[0] = 1;
    for (uint32_t step = 0; step < N; ++step) {
        uint32_t top = F.frobenius(r[K - 1], 1);
        for (uint32_t j = K; j-- > 1;) r[j] = F.frobenius(r[j - 1], 1);
        r[0] = 0;
        if (top) {
            uint32_t c = F.mul(top, lead_inv);
            for (uint32_t j = 0; j < K; ++j)
                if (L.coeff(j)) r[j] = F.sub(r[j], F.mul(c, L.coeff(j)));
        }
    }
    if (r[0] != 1) return false;
    for (uint32_t j = 1; j < K; ++j)
        if (r[j]) return false;
    return true;
}

uint32_t splitting_field_degree(const LinearizedPoly& L, uint32_t cap) {
    for (uint32_t N = 1; N <= cap; ++N)
        if (divides_xqn_minus_x(L, N)) return N;
    throw Error(Errc::CapExceeded,
                "no splitting degree up to N = " + std::to_string(cap) +
                    "; raise the cap to search further");
}

std::vector<TrinomialRow> search_trinomials(uint32_t q, uint32_t k_max, uint32_t N_cap) {
    if (q < 2) throw Error(Errc::BadArguments, "q must be a prime power, at least 2");
    uint32_t p = 2;
    while (q % p != 0) ++p;   // smallest prime factor
    uint32_t e = 0, rest = q;
    while (rest % p == 0) { rest /= p; ++e; }
    if (rest != 1) throw Error(Errc::BadArguments, "q must be a prime power");
    BaseField B = BaseField::make(p, e);

    struct PairJob {
        uint32_t k, s;
        std::future<bool> irreducible;
    };
    std::vector<PairJob> jobs;
    for (uint32_t k = 2; k <= k_max; ++k)
        for (uint32_t s = 1; s < k; ++s) {
            PairJob j;
            j.k = k;
            j.s = s;
            j.irreducible = std::async(std::launch::async, [&B, k, s] {
                return is_irreducible(Poly::trinomial(&B, k, s));
            });
            jobs.push_back(std::move(j));
        }

    std::vector<TrinomialRow> rows;
    for (PairJob& j : jobs) {
        if (!j.irreducible.get()) continue;
        uint64_t base = ipow_u64(q, j.k) - 1;
        for (uint64_t N = base; N <= N_cap; N += base)
            rows.push_back({j.k, j.s, static_cast<uint32_t>(N)});
    }
    return rows;
}

} // namespace qsc
