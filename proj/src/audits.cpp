#include "qsc/audits.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "qsc/errors.hpp"
#include "qsc/linpoly.hpp"
#include "qsc/subspace.hpp"

namespace qsc {

namespace {

std::pair<uint32_t, uint32_t> split_prime_power(uint32_t q) {
    if (q < 2) throw Error(Errc::BadArguments, "q must be at least 2");
    uint32_t p = 2;
    while (q % p != 0) ++p;
    uint32_t e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw Error(Errc::BadArguments, "q must be a prime power");
    return {p, e};
}

std::vector<uint64_t> divisors_of(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d <= v; ++d) {
        if (v % d) continue;
        out.push_back(d);
        if (d != v / d) out.push_back(v / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint32_t top_interior_index(const LinearizedPoly& L) {
    for (int j = L.q_degree() - 1; j >= 0; --j)
        if (L.coeff(static_cast<size_t>(j))) return static_cast<uint32_t>(j);
    return 0;
}

} // namespace

ConjugationSweep conjugation_sweep(const std::vector<std::pair<uint32_t, uint32_t>>& layers,
                                   uint64_t trials, uint64_t seed, uint32_t cap_table_bits) {
    if (layers.empty()) throw Error(Errc::BadArguments, "no field layers given");
    std::vector<Field> fields;
    std::vector<std::vector<uint64_t>> divisors;
    for (auto [q, n] : layers) {
        if (n < 2) throw Error(Errc::BadArguments, "conjugation sweep needs n >= 2");
        auto [p, e] = split_prime_power(q);
        fields.push_back(FieldSpec::create_auto(p, e, n, cap_table_bits));
        divisors.push_back(divisors_of(fields.back()->group_order()));
    }

    SweepRng rng(seed);
    ConjugationSweep out;
    out.trials = trials;
    for (uint64_t i = 0; i < trials; ++i) {
        const Field& F = fields[i % fields.size()];
        const auto& divs = divisors[i % fields.size()];
        uint32_t n = F->n();
        uint64_t G = F->group_order();

        uint32_t k = 1 + static_cast<uint32_t>(rng.below(n - 1));
        Subspace V = Subspace::zero(F);
        do {
            std::vector<uint32_t> gens;
            for (uint32_t j = 0; j < k; ++j) gens.push_back(F->antilog(rng.below(G)));
            V = Subspace::span(F, gens);
        } while (V.dim() != k);

        uint32_t alpha = F->antilog(rng.below(G));
        uint64_t m = divs[rng.below(divs.size())];
        uint32_t s = static_cast<uint32_t>(rng.below(n));

        LinearizedPoly L = subspace_poly(V);
        auto record = [&](const char* which) {
            if (out.failures.size() < 8)
                out.failures.push_back("q=" + std::to_string(F->q()) + " n=" + std::to_string(n) +
                                       " k=" + std::to_string(k) +
                                       " alpha=g^" + std::to_string(F->dlog(alpha)) +
                                       " m=" + std::to_string(m) + " s=" + std::to_string(s) +
                                       " " + which);
        };

        LinearizedPoly scaled = scale_conjugate(L, alpha, m);
        if (scaled != subspace_poly(V.scalar_shift(F->pow(alpha, m)))) {
            ++out.scale_failures;
            record("scale");
        }
        LinearizedPoly twisted = frobenius_conjugate(L, s);
        if (twisted != subspace_poly(frobenius_shift(V, s))) {
            ++out.frobenius_failures;
            record("frobenius");
        }
    }
    return out;
}

ClassCountAudit class_count_audit(const Field& F) {
    ClassCountAudit out;
    out.q = F->q();
    out.n = F->n();
    uint64_t G = F->group_order();

    for (uint64_t m : divisors_of(G)) {
        uint64_t S = G / m;   // order of the m-th power subgroup
        for (uint64_t t : divisors_of(F->n())) {
            uint32_t td = static_cast<uint32_t>(t);
            uint64_t qt1 = ipow_u64(F->q(), td) - 1;

            // group subgroup elements by F_{q^t}* coset
            std::vector<uint32_t> reps;
            std::vector<uint64_t> sizes;
            for (uint64_t i = 0; i < S; ++i) {
                uint32_t x = F->antilog(m * i);
                bool placed = false;
                for (size_t r = 0; r < reps.size(); ++r) {
                    if (equivalent_mod_t(*F, x, reps[r], 1, td)) {
                        ++sizes[r];
                        placed = true;
                        break;
                    }
                }
                if (!placed) {
                    reps.push_back(x);
                    sizes.push_back(1);
                }
            }

            ClassCountCase c;
            c.t = td;
            c.m = m;
            c.classes = reps.size();
            bool uniform = std::all_of(sizes.begin(), sizes.end(),
                                       [&](uint64_t s) { return s == sizes.front(); });
            c.class_size = uniform ? sizes.front() : 0;

            uint64_t expect = S / std::gcd(S, qt1);
            if (c.classes != expect || !uniform) ++out.gcd_mismatches;

            c.formula_integral = G % (m * qt1) == 0;
            if (c.formula_integral) {
                c.formula_matches = c.classes == G / (m * qt1) && c.class_size == qt1;
                if (!c.formula_matches) ++out.integral_mismatches;
            } else {
                ++out.non_integral;
            }
            out.cases.push_back(c);
        }
    }
    return out;
}

OrbitFormulaAudit orbit_formula_audit(uint32_t q, uint32_t n_max, uint32_t cap_table_bits) {
    auto [p, e] = split_prime_power(q);
    OrbitFormulaAudit out;
    out.q = q;
    for (uint32_t n = 1; n <= n_max; ++n) {
        Field F = FieldSpec::create_auto(p, e, n, cap_table_bits);
        uint64_t G = F->group_order();
        for (uint64_t t : divisors_of(n)) {
            uint32_t td = static_cast<uint32_t>(t);
            Subspace V = Subspace::span(F, F->subfield(td));
            for (uint64_t m : divisors_of(G)) {
                OrbitReport rep = quasi_orbit(V, m);
                OrbitFormulaCase c;
                c.n = n;
                c.t = td;
                c.m = m;
                c.length = rep.length;
                uint64_t M = G / m;
                uint64_t expect = M / std::gcd(M, ipow_u64(q, td) - 1);
                c.gcd_formula_ok = rep.t == td && rep.length == expect;
                if (!c.gcd_formula_ok) ++out.gcd_mismatches;
                c.closed_form = rep.closed_form;
                c.closed_form_t = rep.closed_form_t;
                if (rep.closed_form == ClosedFormStatus::Fails) ++out.closed_form_failures;
                out.cases.push_back(c);
            }
        }
    }
    return out;
}

namespace {

struct SweepItem {
    uint64_t lo = 0, hi = 0;   // characteristic bits, exponent i at bit position i
    uint32_t k = 0;
    uint32_t tidx = 0;
};

uint32_t popcount_pair(uint64_t lo, uint64_t hi) {
    return static_cast<uint32_t>(std::popcount(lo) + std::popcount(hi));
}

} // namespace

ShiftBoundSweep shift_bound_sweep(const Field& F, const std::vector<uint32_t>& dims) {
    uint64_t G = F->group_order();
    if (G > 128) throw Error(Errc::CapExceeded, "shift sweep works on q^n - 1 <= 128 bits");

    ShiftBoundSweep out;
    out.q = F->q();
    out.n = F->n();
    out.dims = dims;

    std::vector<SweepItem> items;
    for (uint32_t k : dims) {
        for (const Subspace& V : all_subspaces(F, k)) {
            SweepItem it;
            std::vector<uint8_t> chi = V.characteristic_vector();
            for (uint64_t i = 0; i < G; ++i)
                if (chi[i]) (i < 64 ? it.lo : it.hi) |= 1ull << (i < 64 ? i : i - 64);
            it.k = k;
            it.tidx = top_interior_index(subspace_poly(V));
            items.push_back(it);
        }
    }

    // dimension from the nonzero-element count q^d - 1
    std::vector<int> dim_of(G + 1, -1);
    for (uint32_t d = 0, c = 0; c <= G; ++d) {
        dim_of[c] = static_cast<int>(d);
        uint64_t next = (c + 1) * static_cast<uint64_t>(F->q()) - 1;
        if (next > G) break;
        c = static_cast<uint32_t>(next);
    }

    auto rotate = [&](uint64_t lo, uint64_t hi, uint32_t r) -> std::pair<uint64_t, uint64_t> {
        if (r == 0) return {lo, hi};
        if (G <= 64) {
            uint64_t ones = G == 64 ? ~0ull : (1ull << G) - 1;
            return {((lo << r) | (lo >> (G - r))) & ones, 0};
        }
        unsigned __int128 v = (static_cast<unsigned __int128>(hi) << 64) | lo;
        unsigned __int128 ones = (static_cast<unsigned __int128>(1) << G) - 1;
        v = ((v << r) | (v >> (G - r))) & ones;
        return {static_cast<uint64_t>(v), static_cast<uint64_t>(v >> 64)};
    };

    for (size_t i = 0; i < items.size(); ++i) {
        for (size_t j = i + 1; j < items.size(); ++j) {
            const SweepItem& a = items[i].k <= items[j].k ? items[i] : items[j];
            const SweepItem& b = items[i].k <= items[j].k ? items[j] : items[i];
            if (a.lo == b.lo && a.hi == b.hi && a.k == b.k) continue;   // same subspace
            ++out.pairs;
            uint32_t dim_bound = std::max(b.tidx, a.tidx + b.k - a.k);
            uint32_t dist_bound =
                a.k == b.k ? 2 * std::min(a.k - a.tidx, a.k - b.tidx) : 0;
            for (uint32_t r = 0; r < G; ++r) {
                auto [alo, ahi] = rotate(a.lo, a.hi, r);
                auto [blo, bhi] = rotate(b.lo, b.hi, r);
                uint32_t cnt = popcount_pair(alo & blo, ahi & bhi);
                int d = dim_of[cnt];
                ++out.checks;
                bool dim_bad = d < 0 || static_cast<uint32_t>(d) > dim_bound;
                bool dist_bad = a.k == b.k && d >= 0 &&
                                a.k + b.k - 2 * static_cast<uint32_t>(d) < dist_bound;
                if (dim_bad) ++out.dim_violations;
                if (dist_bad) ++out.dist_violations;
                if ((dim_bad || dist_bad) && out.violations.size() < 8)
                    out.violations.push_back(
                        "kV=" + std::to_string(a.k) + " kU=" + std::to_string(b.k) +
                        " t=" + std::to_string(a.tidx) + " s=" + std::to_string(b.tidx) +
                        " r=" + std::to_string(r) + " dim=" + std::to_string(d));
            }
        }
    }
    return out;
}

} // namespace qsc
