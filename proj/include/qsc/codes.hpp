#ifndef QSC_CODES_HPP
#define QSC_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/ints.hpp"
#include "qsc/orbits.hpp"
#include "qsc/subspace.hpp"

namespace qsc {

struct Claimed {
    uint32_t n = 0, k = 0;
    uint64_t size = 0;
    uint32_t d = 0;
};

struct Provenance {
    std::string construction;   // "file", "single-orbit", "multi-orbit", "refinement"
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::string> notes;
    std::vector<Subspace> generators;   // one representative per orbit when known
};

// A set of subspaces of one field together with its shift modulus m and
// whatever parameters the source claimed. Words are kept sorted and deduped;
// canonical bases make that set semantics.
struct Code {
    Field field;
    uint64_t m = 1;
    std::vector<Subspace> words;
    Provenance provenance;
    std::optional<Claimed> claimed;

    void normalize();
    bool constant_dimension() const;
    uint32_t dim() const { return words.empty() ? 0 : words.front().dim(); }
};

// exhaustive pairwise minimum; stops early only at the theoretical floor
uint32_t min_distance(const std::vector<Subspace>& words);
uint32_t min_distance(const Code& C);

// closure of the word set under the gamma^m shift
bool verify_quasi_cyclic(const Code& C, uint64_t m);

// packing bound floor(gaussian(n,k,q) / gaussian(n-k+delta,delta,q)) for
// constant-dimension codes of minimum distance 2 delta + 2
BigInt ev_bound(uint32_t n, uint32_t k, uint32_t delta, uint32_t q);

struct PairBound {
    uint32_t intersection_dim = 0;
    uint32_t dim_bound = 0;    // max(s, t + l - k), dims ordered k <= l
    bool dim_ok = false;
    uint32_t dist = 0;
    uint32_t dist_bound = 0;   // 2 min(k - t, k - s) when dims agree, else 0
    bool dist_ok = false;
};

// checks dim(alpha^m V cap alpha^m U) and the distance against the bounds
// read off the top interior coefficient indices of the subspace polynomials
PairBound shift_intersection_bound(const Subspace& V, const Subspace& U, uint32_t alpha,
                                   uint64_t m);

// the separation hypothesis for the multi-orbit construction: true when
// a_s^{(q^k-1)/(q^s-1)} and a_0^{(q^k-q^s)/(q^s-1)} lie in different F_q*
// cosets; exponents with (q^s-1) not dividing are compared denominator-cleared
bool coefficient_condition(const FieldSpec& F, uint32_t a0, uint32_t as, uint32_t k, uint32_t s);

// one m-quasi orbit of the kernel of x^{q^k} + x^{q^s} + x in F_{q^n};
// requires (q^k - 1) | n and the associated trinomial irreducible
Code construct_single_orbit(uint32_t q, uint32_t n, uint32_t k, uint32_t s, uint64_t m,
                            uint32_t cap_table_bits = 28, uint64_t cap_orbit = kDefaultOrbitCap);

struct MultiOrbitReport {
    Code code;
    uint32_t n = 0;          // degree of the coefficient layer F_{q^n}
    uint32_t N = 0;          // splitting degree: the code lives in F_{q^N}
    uint64_t a0_exp = 0, as_exp = 0;   // gamma exponents of the chosen coefficients
    bool used_fallback = false;        // the gamma^m pair failed separation, gamma pair used
    std::vector<uint64_t> orbit_lengths;
    bool orbits_disjoint = false;
    uint32_t measured_distance = 0;
    bool quasi_closed = false;
    BigInt formula_num;      // n (q^N - 1); the source formula sizes the code as num/den
    BigInt formula_den;      // m (q - 1)
    bool size_matches_formula = false;
};

// union of the n Frobenius conjugates' m-quasi orbits of the kernel of
// x^{q^k} + a_s x^{q^s} + a_0 x, built over the splitting field F_{q^N};
// disjointness, distance, closure, and the size formula are measured and
// reported, never assumed
MultiOrbitReport construct_multi_orbit(uint32_t q, uint32_t n, uint32_t k, uint32_t s, uint64_t m,
                                       uint32_t N_cap = kDefaultSplitCap,
                                       uint32_t cap_table_bits = 28,
                                       uint64_t cap_orbit = kDefaultOrbitCap);

// same construction with caller-chosen coefficient exponents; pairs failing
// the separation condition are refused
MultiOrbitReport construct_multi_orbit_with_coeffs(uint32_t q, uint32_t n, uint32_t k, uint32_t s,
                                                   uint64_t m, uint64_t a0_exp, uint64_t as_exp,
                                                   uint32_t N_cap = kDefaultSplitCap,
                                                   uint32_t cap_table_bits = 28,
                                                   uint64_t cap_orbit = kDefaultOrbitCap);

struct RefineReport {
    uint64_t m = 1;
    std::vector<uint64_t> cyclic_lengths;             // one per cyclic orbit of the input
    std::vector<std::vector<Subspace>> quasi_orbits;  // m per cyclic orbit, length / m each
    bool partition_exact = false;                     // disjoint with union the input code
};

// splits a cyclic code into its gamma^m quasi-orbits; m must divide every
// cyclic orbit length
RefineReport refine_to_quasi(const Code& C, uint64_t m);

struct AuditReport {
    uint32_t q = 0, n = 0;
    bool constant_dimension = false;
    uint32_t k = 0;
    uint64_t size = 0;
    uint32_t d = 0;            // 0 when fewer than two words
    bool quasi_closed = false;
    bool has_bound = false;
    BigInt bound;              // packing bound at the measured distance
    std::vector<std::string> mismatches;
};

// recomputes every parameter from scratch and compares against the claims
AuditReport audit_code(const Code& C);

} // namespace qsc

#endif
